#pragma once

#include "cbrt2/int128.hpp"

namespace cbrt2 {

/// Exact rational with checked 128-bit parts, normalized so den > 0 and
/// gcd(num, den) = 1. Used wherever the contracts divide by the modulus:
/// trace identities, torus coordinates of approximation points, exhaustive
/// spacing comparisons.
struct Rational {
    Integer num{0};
    Integer den{1};

    Rational() = default;
    Rational(Integer n) : num(n), den(1) {}
    Rational(Integer n, Integer d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == Integer(0))
            throw std::domain_error("Rational: zero denominator");
        if (den < Integer(0)) {
            num = -num;
            den = -den;
        }
        Integer g = gcd(num, den);
        if (g > Integer(1)) {
            num = num / g;
            den = den / g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == Integer(0))
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { return Rational(-num, den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }

    bool is_integer() const { return den == Integer(1); }

    /// Fractional part in [0, 1).
    Rational frac() const { return Rational(mod_floor(num, den), den); }

    double to_double() const { return num.to_double() / den.to_double(); }

    std::string to_string() const {
        return den == Integer(1) ? num.to_string() : num.to_string() + "/" + den.to_string();
    }
};

/// Distance to the nearest integer, exact.
inline Rational frac_distance(const Rational& a) {
    Rational f = a.frac();
    Rational other = Rational(f.den - f.num, f.den);
    return f <= other ? f : other;
}

}  // namespace cbrt2

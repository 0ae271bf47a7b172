#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cbrt2 {

/// Overflow-checked 128-bit signed integer.
///
/// Every arithmetic operation detects overflow and throws std::overflow_error
/// instead of wrapping. This is wide enough for everything the library
/// computes at desk scale (coefficients up to ~2^40 survive the cubic norm
/// form; see cubic_ring.hpp for the precision budget).
class Integer {
public:
    constexpr Integer() noexcept : v_(0) {}
    constexpr Integer(long long x) noexcept : v_(x) {}
    constexpr Integer(int x) noexcept : v_(x) {}
    constexpr Integer(unsigned long long x) noexcept : v_(static_cast<__int128>(x)) {}

    static constexpr Integer raw(__int128 x) noexcept {
        Integer r;
        r.v_ = x;
        return r;
    }

    constexpr __int128 value() const noexcept { return v_; }

    friend Integer operator+(Integer a, Integer b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("Integer: + overflow");
        return raw(r);
    }
    friend Integer operator-(Integer a, Integer b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("Integer: - overflow");
        return raw(r);
    }
    friend Integer operator*(Integer a, Integer b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("Integer: * overflow");
        return raw(r);
    }
    Integer operator-() const {
        if (v_ == kMin)
            throw std::overflow_error("Integer: negate overflow");
        return raw(-v_);
    }
    /// Truncating division, divisor must be nonzero.
    friend Integer operator/(Integer a, Integer b) {
        if (b.v_ == 0)
            throw std::domain_error("Integer: division by zero");
        if (a.v_ == kMin && b.v_ == -1)
            throw std::overflow_error("Integer: / overflow");
        return raw(a.v_ / b.v_);
    }
    friend Integer operator%(Integer a, Integer b) {
        if (b.v_ == 0)
            throw std::domain_error("Integer: modulo by zero");
        if (a.v_ == kMin && b.v_ == -1)
            return raw(0);
        return raw(a.v_ % b.v_);
    }

    Integer& operator+=(Integer b) { return *this = *this + b; }
    Integer& operator-=(Integer b) { return *this = *this - b; }
    Integer& operator*=(Integer b) { return *this = *this * b; }

    friend constexpr bool operator==(Integer a, Integer b) noexcept { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Integer a, Integer b) noexcept { return a.v_ != b.v_; }
    friend constexpr bool operator<(Integer a, Integer b) noexcept { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Integer a, Integer b) noexcept { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Integer a, Integer b) noexcept { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Integer a, Integer b) noexcept { return a.v_ >= b.v_; }

    constexpr int sign() const noexcept { return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0); }
    Integer abs() const { return v_ < 0 ? -*this : *this; }

    /// Conversion is exact for |v| < 2^63; above that it rounds (64-bit mantissa).
    long double to_long_double() const noexcept { return static_cast<long double>(v_); }
    double to_double() const noexcept { return static_cast<double>(v_); }

    bool fits_int64() const noexcept {
        return v_ >= std::numeric_limits<long long>::min() &&
               v_ <= std::numeric_limits<long long>::max();
    }
    long long to_int64() const {
        if (!fits_int64())
            throw std::overflow_error("Integer: does not fit in 64 bits");
        return static_cast<long long>(v_);
    }

    std::string to_string() const {
        if (v_ == 0)
            return "0";
        unsigned __int128 u = v_ < 0 ? -static_cast<unsigned __int128>(v_)
                                     : static_cast<unsigned __int128>(v_);
        char buf[48];
        int i = 48;
        while (u > 0) {
            buf[--i] = static_cast<char>('0' + static_cast<int>(u % 10));
            u /= 10;
        }
        std::string s(buf + i, buf + 48);
        return v_ < 0 ? "-" + s : s;
    }

    friend std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.to_string(); }

private:
    static constexpr __int128 kMin = static_cast<__int128>(1) << 126 << 1;  // -2^127
    __int128 v_;
};

inline Integer gcd(Integer a, Integer b) {
    a = a.abs();
    b = b.abs();
    while (b != Integer(0)) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Integer gcd(Integer a, Integer b, Integer c) { return gcd(gcd(a, b), c); }

/// Residue of a mod m in [0, m), m > 0.
inline Integer mod_floor(Integer a, Integer m) {
    if (m <= Integer(0))
        throw std::domain_error("mod_floor: modulus must be positive");
    Integer r = a % m;
    return r < Integer(0) ? r + m : r;
}

/// Quotient a/b when b exactly divides a; throws otherwise.
inline Integer exact_div(Integer a, Integer b) {
    if (b == Integer(0))
        throw std::domain_error("exact_div: division by zero");
    if (a % b != Integer(0))
        throw std::domain_error("exact_div: not divisible");
    return a / b;
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g, g = gcd(a,b) >= 0.
/// Convention is the textbook recursion egcd(a,0) = (a,1,0); this pins the
/// Bezout coefficients deterministically.
struct ExtGcd {
    Integer g, x, y;
};

inline ExtGcd ext_gcd(Integer a, Integer b) {
    if (b == Integer(0)) {
        if (a < Integer(0))
            return {-a, Integer(-1), Integer(0)};
        return {a, Integer(1), Integer(0)};
    }
    // iterative to avoid recursion depth surprises
    Integer old_r = a, r = b;
    Integer old_x = 1, x = 0;
    Integer old_y = 0, y = 1;
    while (r != Integer(0)) {
        Integer q = old_r / r;  // truncating; consistent with the recursion on any signs
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < Integer(0))
        return {-old_r, -old_x, -old_y};
    return {old_r, old_x, old_y};
}

}  // namespace cbrt2

#pragma once

#include <cmath>

#include "cbrt2/int128.hpp"

namespace cbrt2 {

/// Element a + b*2^(1/3) + c*2^(2/3) of the order O = Z[2^(1/3)].
/// The triple is the unique representation in the integral basis
/// 1, 2^(1/3), 2^(2/3); no normalization is ever required.
struct CubicInt {
    Integer a{0}, b{0}, c{0};

    CubicInt() = default;
    CubicInt(Integer a_, Integer b_, Integer c_) : a(a_), b(b_), c(c_) {}
    CubicInt(long long a_, long long b_, long long c_) : a(a_), b(b_), c(c_) {}

    friend bool operator==(const CubicInt& x, const CubicInt& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator!=(const CubicInt& x, const CubicInt& y) { return !(x == y); }
    friend bool operator<(const CubicInt& x, const CubicInt& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }

    CubicInt operator-() const { return {-a, -b, -c}; }
    bool is_zero() const { return a == Integer(0) && b == Integer(0) && c == Integer(0); }

    std::string to_string() const {
        return "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const CubicInt& x) {
        return os << x.to_string();
    }
};

/// Coefficients (a^2-2bc, 2c^2-ab, b^2-ac) of N(x)/x; the denominators of the
/// simultaneous approximations and the first row of the inverse basis matrix.
struct CofactorTriple {
    Integer g1, g2, g3;
};

inline CubicInt one() { return {1, 0, 0}; }

/// Fundamental unit 1 + 2^(1/3) + 2^(2/3); the unit group of O is <-1, eps>.
inline CubicInt fundamental_unit() { return {1, 1, 1}; }

/// eps^(-1) = -1 + 2^(1/3), also a unit.
inline CubicInt fundamental_unit_inverse() { return {-1, 1, 0}; }

/// Exact product in O, using 2^(1/3)*2^(2/3) = 2.
inline CubicInt mul(const CubicInt& x, const CubicInt& y) {
    return {x.a * y.a + (x.b * y.c + x.c * y.b) * Integer(2),
            x.a * y.b + x.b * y.a + x.c * y.c * Integer(2),
            x.a * y.c + x.c * y.a + x.b * y.b};
}

inline CubicInt add(const CubicInt& x, const CubicInt& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
}

inline CubicInt scale(Integer k, const CubicInt& x) { return {k * x.a, k * x.b, k * x.c}; }

/// Field norm N(x) = a^3 + 2b^3 + 4c^3 - 6abc, multiplicative.
inline Integer norm(const CubicInt& x) {
    return x.a * x.a * x.a + Integer(2) * x.b * x.b * x.b + Integer(4) * x.c * x.c * x.c -
           Integer(6) * x.a * x.b * x.c;
}

/// Field trace; Tr(2^(1/3)) = Tr(2^(2/3)) = 0, so Tr(x) = 3a.
inline Integer trace(const CubicInt& x) { return Integer(3) * x.a; }

inline CofactorTriple cofactor(const CubicInt& x) {
    return {x.a * x.a - Integer(2) * x.b * x.c, Integer(2) * x.c * x.c - x.a * x.b,
            x.b * x.b - x.a * x.c};
}

inline CubicInt as_cubic(const CofactorTriple& g) { return {g.g1, g.g2, g.g3}; }

namespace detail {
// 2^(1/3) and 2^(2/3) to long double precision.
inline const long double kCbrt2 = cbrtl(2.0L);
inline const long double kCbrt4 = kCbrt2 * kCbrt2;
}  // namespace detail

/// Real embedding x^(1) = a + b*2^(1/3) + c*2^(2/3), evaluated in extended
/// (80-bit) precision and returned as double.
///
/// Precision budget: relative error <= 2^-50 whenever the result is no
/// smaller than ~2^-10 times the largest term, which holds for every
/// fundamental-domain placement the library performs (domain candidates have
/// coefficients O(m^(1/3)) and embedding ~ m^(1/3)). Heavily cancelling
/// inputs degrade gracefully; the unit-reduction code switches to the norm
/// route below in that regime instead of trusting this value.
inline double embed_real(const CubicInt& x) {
    long double v = x.a.to_long_double() + x.b.to_long_double() * detail::kCbrt2 +
                    x.c.to_long_double() * detail::kCbrt4;
    return static_cast<double>(v);
}

namespace detail {

// |x^(2)|^2 computed from the complex embedding written in real/imaginary
// parts: x^(2) = (a - h/2) + i*(sqrt(3)/2)*(b*t - c*t^2), h = b*t + c*t^2.
// A sum of two squares, so the only cancellation is inside each part; this
// stays meaningful long after the direct real-embedding evaluation has lost
// all digits.
inline long double embed_complex_sq(const CubicInt& x) {
    long double bt = x.b.to_long_double() * kCbrt2;
    long double ct2 = x.c.to_long_double() * kCbrt4;
    long double re = x.a.to_long_double() - (bt + ct2) * 0.5L;
    long double im_part = bt - ct2;
    return re * re + 0.75L * im_part * im_part;
}

// Real embedding with the cancellation fallback x^(1) = N(x) / |x^(2)|^2.
// Requires the norm, which the callers (fundamental-domain tests) already
// have. For x != 0 the sign of x^(1) equals the sign of N(x).
inline long double embed_real_robust(const CubicInt& x, Integer nrm) {
    long double direct = x.a.to_long_double() + x.b.to_long_double() * kCbrt2 +
                         x.c.to_long_double() * kCbrt4;
    long double mag = fabsl(x.a.to_long_double()) + fabsl(x.b.to_long_double()) * kCbrt2 +
                      fabsl(x.c.to_long_double()) * kCbrt4;
    if (fabsl(direct) > ldexpl(mag, -40))
        return direct;
    return nrm.to_long_double() / embed_complex_sq(x);
}

}  // namespace detail

/// |x^(2)| = |x^(3)| = sqrt(|N(x)| / |x^(1)|).
inline double embed_complex_abs(const CubicInt& x) {
    if (x.is_zero())
        throw std::domain_error("embed_complex_abs: zero element");
    return static_cast<double>(sqrtl(detail::embed_complex_sq(x)));
}

}  // namespace cbrt2

#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "cbrt2/cubic_ring.hpp"
#include "cbrt2/ideal.hpp"
#include "cbrt2/mat3.hpp"
#include "cbrt2/roots.hpp"

namespace cbrt2 {

struct NotPrimitiveError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotUnimodularError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The unimodular change of basis between the HNF basis of a primitive ideal
/// and the basis given by a generator alpha = a + b*2^(1/3) + c*2^(2/3):
///
///     | u  b  c |   | m    0 0 |   | a  b  c |
///     | v  a  b | * | -nu' 1 0 | = | 2c a  b |
///     | w 2c  a |   | -nu" 0 1 |   | 2b 2c a |
///
/// (u,v,w) is the deterministic Bezout solution of
/// u*g1 + v*g2 + w*g3 = 1 against the cofactor triple of (a,b,c).
struct GammaData {
    Integer a, b, c;
    Integer u, v, w;
    long long m = 1;
    long long nu = 0;
};

/// One simultaneous approximation point (n1/den, n2/den). Stored with the
/// raw, unreduced numerators; together with den they form (up to sign) a
/// column of the inverse of the gamma matrix, so gcd(den, n1, n2) = 1.
struct RationalPoint {
    Integer n1, n2, den;
};

/// gcd(g1, g2, g3) = 1: the principal ideal (x) is primitive.
inline bool is_primitive_generator(const CubicInt& x) {
    CofactorTriple g = cofactor(x);
    return gcd(g.g1, g.g2, g.g3) == Integer(1);
}

struct Uvw {
    Integer u, v, w;
};

/// Deterministic Bezout data for u*g1 + v*g2 + w*g3 = 1: extended Euclid on
/// (g1, g2) first, then on (gcd, g3). The downstream results never depend on
/// this choice; it only pins serialized output.
inline Uvw solve_uvw(const CubicInt& x) {
    CofactorTriple g = cofactor(x);
    ExtGcd e1 = ext_gcd(g.g1, g.g2);
    ExtGcd e2 = ext_gcd(e1.g, g.g3);
    if (e2.g != Integer(1))
        throw NotPrimitiveError("solve_uvw: generator is not primitive");
    return {e2.x * e1.x, e2.x * e1.y, e2.y};
}

namespace detail {

inline const long double kEps1 = 1.0L + kCbrt2 + kCbrt4;  // fundamental unit embedding
inline constexpr long double kTieTol = 1e-10L;
inline constexpr long long kBoxFactor = 20;

// Half-open domain window [lo, hi) for the real embedding of a positive-norm
// domain representative, with the boundary-tie shift applied: values within
// relative kTieTol below an endpoint are classified with the lower interval.
inline bool in_window(long double e, long double m13) {
    long double lo = m13 / (2.0L * kEps1);
    long double hi = m13 * 0.5L;
    return e >= lo * (1.0L - kTieTol) && e < hi * (1.0L - kTieTol);
}

}  // namespace detail

/// True iff norm(x) > 0 and the real embedding lies in
/// [m^(1/3)/(2*eps1), m^(1/3)/2), the canonical unit-orbit window.
inline bool in_domain(const CubicInt& x) {
    Integer n = norm(x);
    if (n == Integer(0))
        throw std::domain_error("in_domain: zero norm");
    if (n < Integer(0))
        return false;
    long double m13 = cbrtl(n.to_long_double());
    return detail::in_window(detail::embed_real_robust(x, n), m13);
}

/// Multiply by +-eps^k to land in the fundamental domain. The step count is
/// estimated once from the logarithm of the embedding, then corrected by at
/// most a couple of single steps.
inline CubicInt reduce_to_domain(const CubicInt& x) {
    Integer n = norm(x);
    if (n == Integer(0))
        throw std::domain_error("reduce_to_domain: zero norm");
    CubicInt y = x;
    if (n < Integer(0)) {
        y = -y;
        n = -n;
    }
    long double m13 = cbrtl(n.to_long_double());
    long double lo = m13 / (2.0L * detail::kEps1);
    long double target = m13 * 0.5L / sqrtl(detail::kEps1);  // geometric center
    long double e = detail::embed_real_robust(y, n);
    long long k = llroundl(logl(e / target) / logl(detail::kEps1));
    const CubicInt step = k > 0 ? fundamental_unit_inverse() : fundamental_unit();
    for (long long i = 0; i < (k > 0 ? k : -k); ++i)
        y = mul(y, step);
    for (int i = 0; i < 64; ++i) {
        e = detail::embed_real_robust(y, n);
        if (detail::in_window(e, m13))
            return y;
        y = mul(y, e < lo ? fundamental_unit() : fundamental_unit_inverse());
    }
    throw std::runtime_error("reduce_to_domain: did not converge");
}

/// The pair (m, nu) generated by a primitive x with positive norm:
/// m is the norm form and -nu = a(bw-av) + 2c(au-cw) + 2b(cv-bu), reduced
/// into [0, m). Independent of the Bezout choice.
inline RootPair root_from_generator(const CubicInt& x) {
    if (!is_primitive_generator(x))
        throw NotPrimitiveError("root_from_generator: not primitive");
    Integer m = norm(x);
    if (m <= Integer(0))
        throw std::domain_error("root_from_generator: norm must be positive");
    Uvw s = solve_uvw(x);
    const Integer &a = x.a, &b = x.b, &c = x.c;
    Integer neg_nu = a * (b * s.w - a * s.v) + Integer(2) * c * (a * s.u - c * s.w) +
                     Integer(2) * b * (c * s.v - b * s.u);
    Integer nu = mod_floor(-neg_nu, m);
    RootPair p{m.to_int64(), nu.to_int64()};
    if (!is_valid_root_pair(p))
        throw std::logic_error("root_from_generator: produced residue is not a root");
    return p;
}

namespace detail {

inline long long norm64(long long a, long long b, long long c) {
    return a * a * a + 2 * b * b * b + 4 * c * c * c - 6 * a * b * c;
}

// Scan the ideal lattice of p for elements with norm exactly m, coefficients
// bounded by B, in shells of growing max(|b|,|c|). The negative-norm mirror
// of every hit sits on the same shell, so restricting to positive norm loses
// nothing. first_only stops at the first hit (any hit reduces to the same
// domain representative).
inline std::vector<CubicInt> box_generators(const RootPair& p, long long B, bool first_only,
                                            long long shell_from = 0) {
    std::vector<CubicInt> hits;
    const long long m = p.m, nu = p.nu;
    const long long nu2 = detail::mulmod(nu, nu, m);
    auto try_cell = [&](long long b, long long c) {
        long long r = (-(b % m) * nu - (c % m) * nu2) % m;
        if (r < 0)
            r += m;
        long long amin = r - m * ((r + B) / m);
        for (long long a = amin; a <= B; a += m) {
            if (norm64(a, b, c) == m)
                hits.push_back(CubicInt(a, b, c));
        }
    };
    for (long long s = shell_from; s <= B; ++s) {
        if (s == 0) {
            try_cell(0, 0);
        } else {
            for (long long b = -s; b <= s; ++b) {
                try_cell(b, -s);
                try_cell(b, s);
            }
            for (long long c = -s + 1; c <= s - 1; ++c) {
                try_cell(-s, c);
                try_cell(s, c);
            }
        }
        if (first_only && !hits.empty())
            return hits;
    }
    return hits;
}

}  // namespace detail

/// The unique domain generator of the primitive ideal of p: search the ideal
/// lattice inside |a|,|b|,|c| <= 20*m^(1/3) for a norm-m element, then reduce
/// to the fundamental domain. The box provably contains the domain generator;
/// if it somehow yields nothing the search widens once and then fails loudly.
inline CubicInt generator_from_root(const RootPair& p) {
    if (!is_valid_root_pair(p))
        throw std::invalid_argument("generator_from_root: not a root pair");
    long long B =
        static_cast<long long>(detail::kBoxFactor * cbrtl(static_cast<long double>(p.m))) + 1;
    auto hits = detail::box_generators(p, B, true);
    if (hits.empty())
        hits = detail::box_generators(p, 2 * B, true, B + 1);
    if (hits.empty())
        throw std::runtime_error("generator_from_root: no generator in widened box");
    return reduce_to_domain(hits.front());
}

/// One domain generator per root pair with M < m <= 2M, ordered by (m, nu).
inline std::vector<std::pair<CubicInt, RootPair>> enumerate_generators(long long M) {
    std::vector<std::pair<CubicInt, RootPair>> out;
    for (const RootPair& p : enumerate_root_pairs(M))
        out.emplace_back(generator_from_root(p), p);
    return out;
}

/// Gamma matrix rows (u,b,c), (v,a,b), (w,2c,a).
inline Mat3 gamma_matrix(const GammaData& g) {
    return Mat3{{{g.u, g.b, g.c}, {g.v, g.a, g.b}, {g.w, Integer(2) * g.c, g.a}}};
}

/// Multiplication matrix of alpha on the basis 1, 2^(1/3), 2^(2/3).
inline Mat3 mult_matrix(const CubicInt& x) {
    return Mat3{{{x.a, x.b, x.c},
                 {Integer(2) * x.c, x.a, x.b},
                 {Integer(2) * x.b, Integer(2) * x.c, x.a}}};
}

/// Full parametrization data for a primitive positive-norm generator.
inline GammaData make_gamma(const CubicInt& x) {
    RootPair p = root_from_generator(x);
    Uvw s = solve_uvw(x);
    return GammaData{x.a, x.b, x.c, s.u, s.v, s.w, p.m, p.nu};
}

/// The three simultaneous approximations to (nu/m, nu^2/m):
///
///   p1 = ((bu-cv)/g3, (bv-au)/g3)     p2 = ((cw-au)/g2, (2cu-bw)/g2)
///   p3 = ((av-bw)/g1, (aw-2cv)/g1)
///
/// Each (den, -n1, -n2) is literally a column of the inverse gamma matrix,
/// which is what makes the exact recovery below possible. Requires (a,b,c)
/// in the fundamental domain so that g1, g2, g3 > 0.
inline std::array<RationalPoint, 3> approximations(const GammaData& g) {
    CubicInt x{g.a, g.b, g.c};
    if (!in_domain(x))
        throw std::domain_error("approximations: generator not in fundamental domain");
    CofactorTriple cf = cofactor(x);
    if (cf.g1 <= Integer(0) || cf.g2 <= Integer(0) || cf.g3 <= Integer(0))
        throw std::logic_error("approximations: nonpositive denominator in domain");
    const Integer &a = g.a, &b = g.b, &c = g.c, &u = g.u, &v = g.v, &w = g.w;
    RationalPoint p1{b * u - c * v, b * v - a * u, cf.g3};
    RationalPoint p2{c * w - a * u, Integer(2) * c * u - b * w, cf.g2};
    RationalPoint p3{a * v - b * w, a * w - Integer(2) * c * v, cf.g1};
    return {p1, p2, p3};
}

/// Assemble the three points back into the inverse-gamma matrix: column i is
/// (den, -n1, -n2) of the point with denominator g_i (so point 3, 2, 1).
inline Mat3 columns_from_points(const std::array<RationalPoint, 3>& pts) {
    Mat3 M;
    const RationalPoint* by_col[3] = {&pts[2], &pts[1], &pts[0]};
    for (int j = 0; j < 3; ++j) {
        M[0][j] = by_col[j]->den;
        M[1][j] = -by_col[j]->n1;
        M[2][j] = -by_col[j]->n2;
    }
    return M;
}

/// Invert the assembled column matrix by integer adjugate and read the
/// parametrization back off: rows (u,b,c), (v,a,b), (w,2c,a), then (m, nu).
/// Left inverse of the approximations pipeline.
inline GammaData recover_root(const Mat3& cols) {
    if (det3(cols) != Integer(1))
        throw NotUnimodularError("recover_root: determinant is not 1");
    Mat3 g = adjugate(cols);
    Integer u = g[0][0], b = g[0][1], c = g[0][2];
    Integer v = g[1][0], a = g[1][1];
    Integer w = g[2][0];
    if (g[1][2] != b || g[2][1] != Integer(2) * c || g[2][2] != a)
        throw std::domain_error("recover_root: matrix is not a parametrization matrix");
    Integer m = norm(CubicInt{a, b, c});
    if (m <= Integer(0))
        throw std::domain_error("recover_root: nonpositive norm");
    Integer neg_nu =
        a * (b * w - a * v) + Integer(2) * c * (a * u - c * w) + Integer(2) * b * (c * v - b * u);
    Integer nu = mod_floor(-neg_nu, m);
    return GammaData{a, b, c, u, v, w, m.to_int64(), nu.to_int64()};
}

}  // namespace cbrt2

#pragma once

#include <array>

#include "cbrt2/cubic_ring.hpp"
#include "cbrt2/mat3.hpp"
#include "cbrt2/roots.hpp"

namespace cbrt2 {

struct NotAnIdealError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Hermite-normal-form basis (m,0,0), (t21,1,0), (t31,0,1) of a primitive
/// ideal, rows expressed against the basis 1, 2^(1/3), 2^(2/3). Residues are
/// stored normalized to [0, m) so equality and serialization are canonical.
struct IdealHNF {
    long long m = 1;
    long long t21 = 0;
    long long t31 = 0;

    friend bool operator==(const IdealHNF& x, const IdealHNF& y) {
        return x.m == y.m && x.t21 == y.t21 && x.t31 == y.t31;
    }
};

inline IdealHNF root_to_ideal(const RootPair& p) {
    if (!is_valid_root_pair(p))
        throw std::invalid_argument("root_to_ideal: not a root pair");
    long long t21 = (p.m - p.nu) % p.m;
    long long nu2 = detail::mulmod(p.nu, p.nu, p.m);
    long long t31 = (p.m - nu2) % p.m;
    return {p.m, t21, t31};
}

inline RootPair ideal_to_root(const IdealHNF& I) {
    if (I.m < 1 || I.t21 < 0 || I.t21 >= I.m || I.t31 < 0 || I.t31 >= I.m)
        throw NotAnIdealError("ideal_to_root: entries out of range");
    long long nu = (I.m - I.t21) % I.m;
    long long nu2 = detail::mulmod(nu, nu, I.m);
    if (I.t31 != (I.m - nu2) % I.m || !detail::is_root(nu, I.m))
        throw NotAnIdealError("ideal_to_root: lattice is not a primitive ideal");
    return {I.m, nu};
}

/// Full lower-triangular HNF basis matrix, rows against 1, 2^(1/3), 2^(2/3).
using Hnf3 = Mat3;

inline bool is_hnf(const Hnf3& H) {
    if (H[0][1] != Integer(0) || H[0][2] != Integer(0) || H[1][2] != Integer(0))
        return false;
    if (H[0][0] <= Integer(0) || H[1][1] <= Integer(0) || H[2][2] <= Integer(0))
        return false;
    if (H[1][0] < Integer(0) || H[1][0] >= H[0][0])
        return false;
    if (H[2][0] < Integer(0) || H[2][0] >= H[0][0])
        return false;
    if (H[2][1] < Integer(0) || H[2][1] >= H[1][1])
        return false;
    return true;
}

namespace detail {

// Multiplication-by-2^(1/3) matrix on the basis 1, 2^(1/3), 2^(2/3).
inline Hnf3 companion() {
    return Hnf3{{{Integer(0), Integer(1), Integer(0)},
                 {Integer(0), Integer(0), Integer(1)},
                 {Integer(2), Integer(0), Integer(0)}}};
}

}  // namespace detail

/// True iff the lattice spanned by H (rows, against 1, 2^(1/3), 2^(2/3)) is
/// an ideal of O: the conjugated multiplication-by-2^(1/3) matrix
/// H * C * H^(-1) must be integral, checked as exact divisibility of
/// H * C * adj(H) by det(H) in all nine entries.
inline bool is_ideal_lattice(const Hnf3& H) {
    if (!is_hnf(H))
        throw std::invalid_argument("is_ideal_lattice: not in Hermite normal form");
    Integer det = H[0][0] * H[1][1] * H[2][2];
    Hnf3 M = matmul(matmul(H, detail::companion()), adjugate(H));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (M[i][j] % det != Integer(0))
                return false;
    return true;
}

/// x in I, via the quotient map O -> O/I = Z/mZ sending 2^(1/3) to nu.
inline bool membership(const CubicInt& x, const IdealHNF& I) {
    RootPair p = ideal_to_root(I);
    Integer m(p.m), nu(p.nu);
    Integer r = mod_floor(x.a + x.b * nu + x.c * nu * nu, m);
    return r == Integer(0);
}

inline Hnf3 hnf_matrix(const IdealHNF& I) {
    return Hnf3{{{Integer(I.m), Integer(0), Integer(0)},
                 {Integer(I.t21), Integer(1), Integer(0)},
                 {Integer(I.t31), Integer(0), Integer(1)}}};
}

}  // namespace cbrt2

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbrt2/parallel.hpp"
#include "cbrt2/roots.hpp"

namespace cbrt2 {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based +-1 stream: the sign at (k,l) depends only on (seed,k,l),
/// so parallel evaluation order cannot change the sequence.
inline double pm1_at(std::uint64_t seed, std::uint64_t k, std::uint64_t l) {
    std::uint64_t h = splitmix64(seed ^ (k * 0x9E3779B97F4A7C15ULL));
    h = splitmix64(h ^ (l * 0xC2B2AE3D27D4EB4FULL));
    return (h >> 63) ? 1.0 : -1.0;
}

/// e(t/m) for t in [0,m); arguments are exact reduced fractions, so no
/// precision is lost to large k*nu before the table lookup.
inline std::vector<std::complex<double>> unit_table(long long m) {
    std::vector<std::complex<double>> tab(static_cast<std::size_t>(m));
    const double twopi = 8.0 * std::atan(1.0);
    for (long long t = 0; t < m; ++t)
        tab[static_cast<std::size_t>(t)] =
            std::polar(1.0, twopi * static_cast<double>(t) / static_cast<double>(m));
    return tab;
}

}  // namespace detail

/// Complex coefficients a_{k,l} supported on 1 <= k <= K, 1 <= l <= L.
/// Product-form sequences (ones, spike) carry row/column factors so the
/// bilinear sums factor; dense +-1 sequences carry a sign matrix.
struct CoeffSeq {
    long long K = 0;
    long long L = 0;
    bool product = false;
    std::vector<std::complex<double>> row, col;  // product form, sizes K and L
    std::vector<double> signs;                   // dense +-1 form, row-major K*L
    std::vector<std::complex<double>> dense;     // general dense form, row-major K*L
    std::string descriptor;
    std::optional<std::uint64_t> seed;

    std::complex<double> value(long long k, long long l) const {
        if (k < 1 || k > K || l < 1 || l > L)
            return {0.0, 0.0};
        std::size_t i = static_cast<std::size_t>((k - 1) * L + (l - 1));
        if (product)
            return row[static_cast<std::size_t>(k - 1)] * col[static_cast<std::size_t>(l - 1)];
        if (!signs.empty())
            return {signs[i], 0.0};
        return dense[i];
    }

    double sum_sq() const {
        if (product) {
            double r = 0.0, c = 0.0;
            for (const auto& z : row)
                r += std::norm(z);
            for (const auto& z : col)
                c += std::norm(z);
            return r * c;
        }
        double s2 = 0.0;
        for (double v : signs)
            s2 += v * v;
        for (const auto& z : dense)
            s2 += std::norm(z);
        return s2;
    }
};

inline CoeffSeq make_ones(long long K, long long L) {
    if (K < 1 || L < 1)
        throw std::invalid_argument("make_ones: K, L must be positive");
    CoeffSeq s;
    s.K = K;
    s.L = L;
    s.product = true;
    s.row.assign(static_cast<std::size_t>(K), {1.0, 0.0});
    s.col.assign(static_cast<std::size_t>(L), {1.0, 0.0});
    s.descriptor = "ones";
    return s;
}

/// Spike tuned to a fixed root pair: a_{k,l} = e(-(k*nu0 + l*nu0^2)/m0), so
/// the (m0, nu0) term of the sieve sum contributes (K*L)^2 alone.
inline CoeffSeq make_spike(long long m0, long long nu0, long long K, long long L) {
    if (K < 1 || L < 1)
        throw std::invalid_argument("make_spike: K, L must be positive");
    if (!is_valid_root_pair({m0, nu0}))
        throw std::invalid_argument("make_spike: (m0, nu0) is not a root pair");
    CoeffSeq s;
    s.K = K;
    s.L = L;
    s.product = true;
    auto tab = detail::unit_table(m0);
    long long nu2 = detail::mulmod(nu0, nu0, m0);
    s.row.resize(static_cast<std::size_t>(K));
    s.col.resize(static_cast<std::size_t>(L));
    long long idx = 0;
    for (long long k = 1; k <= K; ++k) {
        idx += nu0;
        if (idx >= m0)
            idx -= m0;
        s.row[static_cast<std::size_t>(k - 1)] = std::conj(tab[static_cast<std::size_t>(idx)]);
    }
    idx = 0;
    for (long long l = 1; l <= L; ++l) {
        idx += nu2;
        if (idx >= m0)
            idx -= m0;
        s.col[static_cast<std::size_t>(l - 1)] = std::conj(tab[static_cast<std::size_t>(idx)]);
    }
    s.descriptor = "spike(" + std::to_string(m0) + "," + std::to_string(nu0) + ")";
    return s;
}

/// The same sequence multiplied by a nonzero scalar; the sieve ratio is
/// invariant under this.
inline CoeffSeq scaled(const CoeffSeq& s, std::complex<double> z) {
    CoeffSeq r = s;
    r.descriptor = s.descriptor + "*scaled";
    if (r.product) {
        for (auto& x : r.row)
            x *= z;
        return r;
    }
    if (!r.signs.empty()) {
        r.dense.resize(r.signs.size());
        for (std::size_t i = 0; i < r.signs.size(); ++i)
            r.dense[i] = r.signs[i] * z;
        r.signs.clear();
        return r;
    }
    for (auto& x : r.dense)
        x *= z;
    return r;
}

inline CoeffSeq make_random(long long K, long long L, std::uint64_t seed) {
    if (K < 1 || L < 1)
        throw std::invalid_argument("make_random: K, L must be positive");
    CoeffSeq s;
    s.K = K;
    s.L = L;
    s.signs.resize(static_cast<std::size_t>(K * L));
    for (long long k = 1; k <= K; ++k)
        for (long long l = 1; l <= L; ++l)
            s.signs[static_cast<std::size_t>((k - 1) * L + (l - 1))] =
                detail::pm1_at(seed, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l));
    s.descriptor = "random";
    s.seed = seed;
    return s;
}

namespace detail {

/// |sum_k sum_l a_{k,l} e((k nu + l nu^2)/m)|^2 for one pair, k outer, l
/// inner. The exponential arguments are reduced mod m in integers before any
/// floating point enters.
inline double pair_term(long long m, long long nu, const CoeffSeq& s,
                        const std::vector<std::complex<double>>& tab) {
    const long long step_k = nu % m;
    const long long step_l = detail::mulmod(nu, nu, m);
    std::complex<double> acc{0.0, 0.0};
    if (s.product) {
        std::complex<double> sk{0.0, 0.0}, sl{0.0, 0.0};
        long long idx = 0;
        for (long long k = 1; k <= s.K; ++k) {
            idx += step_k;
            if (idx >= m)
                idx -= m;
            sk += s.row[static_cast<std::size_t>(k - 1)] * tab[static_cast<std::size_t>(idx)];
        }
        idx = 0;
        for (long long l = 1; l <= s.L; ++l) {
            idx += step_l;
            if (idx >= m)
                idx -= m;
            sl += s.col[static_cast<std::size_t>(l - 1)] * tab[static_cast<std::size_t>(idx)];
        }
        acc = sk * sl;
    } else {
        std::vector<std::complex<double>> y(static_cast<std::size_t>(s.L));
        long long idx = 0;
        for (long long l = 0; l < s.L; ++l) {
            idx += step_l;
            if (idx >= m)
                idx -= m;
            y[static_cast<std::size_t>(l)] = tab[static_cast<std::size_t>(idx)];
        }
        idx = 0;
        const std::size_t L = static_cast<std::size_t>(s.L);
        if (!s.signs.empty()) {
            std::vector<double> yre(L), yim(L);
            for (std::size_t l = 0; l < L; ++l) {
                yre[l] = y[l].real();
                yim[l] = y[l].imag();
            }
            for (long long k = 0; k < s.K; ++k) {
                idx += step_k;
                if (idx >= m)
                    idx -= m;
                const double* srow = s.signs.data() + static_cast<std::size_t>(k) * L;
                double ire = 0.0, iim = 0.0;
                for (std::size_t l = 0; l < L; ++l) {
                    ire += srow[l] * yre[l];
                    iim += srow[l] * yim[l];
                }
                const std::complex<double>& xk = tab[static_cast<std::size_t>(idx)];
                acc += std::complex<double>(xk.real() * ire - xk.imag() * iim,
                                            xk.real() * iim + xk.imag() * ire);
            }
        } else {
            for (long long k = 0; k < s.K; ++k) {
                idx += step_k;
                if (idx >= m)
                    idx -= m;
                const std::complex<double>* drow =
                    s.dense.data() + static_cast<std::size_t>(k) * L;
                std::complex<double> inner{0.0, 0.0};
                for (std::size_t l = 0; l < L; ++l)
                    inner += drow[l] * y[l];
                acc += tab[static_cast<std::size_t>(idx)] * inner;
            }
        }
    }
    return std::norm(acc);
}

}  // namespace detail

/// Left side of the sieve inequality over M < m <= 2M. Pairs are evaluated
/// independently (possibly in parallel) and accumulated in (m, nu) order, so
/// the result is bit-deterministic.
inline double sieve_lhs(long long M, const CoeffSeq& s) {
    if (M < 1)
        throw std::invalid_argument("sieve_lhs: M must be positive");
    auto pairs = enumerate_root_pairs(M);
    std::vector<double> terms(pairs.size(), 0.0);
    parallel_for(pairs.size(), [&](std::size_t i) {
        auto tab = detail::unit_table(pairs[i].m);
        terms[i] = detail::pair_term(pairs[i].m, pairs[i].nu, s, tab);
    });
    double total = 0.0;
    for (double t : terms)
        total += t;
    return total;
}

/// Right side (M + K)(M + L) * sum |a|^2.
inline double sieve_rhs(long long M, const CoeffSeq& s) {
    if (M < 1)
        throw std::invalid_argument("sieve_rhs: M must be positive");
    return (static_cast<double>(M) + static_cast<double>(s.K)) *
           (static_cast<double>(M) + static_cast<double>(s.L)) * s.sum_sq();
}

struct SieveReport {
    long long M = 0, K = 0, L = 0;
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
    long long pair_count = 0;
    std::string seq_descriptor;
    std::optional<std::uint64_t> seed;
};

inline SieveReport sieve_ratio(long long M, const CoeffSeq& s) {
    if (s.sum_sq() <= 0.0)
        throw std::domain_error("sieve_ratio: degenerate sequence");
    SieveReport r;
    r.M = M;
    r.K = s.K;
    r.L = s.L;
    r.lhs = sieve_lhs(M, s);
    r.rhs = sieve_rhs(M, s);
    r.ratio = r.lhs / r.rhs;
    r.pair_count = static_cast<long long>(enumerate_root_pairs(M).size());
    r.seq_descriptor = s.descriptor;
    r.seed = s.seed;
    return r;
}

/// Dual form: sum over k <= K, l <= L of |sum over pairs of
/// b_{m,nu} e((k nu + l nu^2)/m)|^2, b supported on M < m <= 2M.
inline double dual_lhs(long long M, long long K, long long L,
                       const std::vector<std::pair<RootPair, std::complex<double>>>& b) {
    if (M < 1 || K < 1 || L < 1)
        throw std::invalid_argument("dual_lhs: M, K, L must be positive");
    for (const auto& [p, coef] : b) {
        (void)coef;
        if (p.m <= M || p.m > 2 * M || !is_valid_root_pair(p))
            throw std::invalid_argument("dual_lhs: support outside (M, 2M] root pairs");
    }
    std::size_t P = b.size();
    // per-pair power tables x_{p,k} = e(k nu/m), y_{p,l} = e(l nu^2/m)
    std::vector<std::vector<std::complex<double>>> xs(P), ys(P);
    for (std::size_t p = 0; p < P; ++p) {
        auto tab = detail::unit_table(b[p].first.m);
        long long m = b[p].first.m;
        long long sk = b[p].first.nu % m;
        long long sl = detail::mulmod(b[p].first.nu, b[p].first.nu, m);
        xs[p].resize(static_cast<std::size_t>(K));
        ys[p].resize(static_cast<std::size_t>(L));
        long long idx = 0;
        for (long long k = 0; k < K; ++k) {
            idx += sk;
            if (idx >= m)
                idx -= m;
            xs[p][static_cast<std::size_t>(k)] = tab[static_cast<std::size_t>(idx)];
        }
        idx = 0;
        for (long long l = 0; l < L; ++l) {
            idx += sl;
            if (idx >= m)
                idx -= m;
            ys[p][static_cast<std::size_t>(l)] = tab[static_cast<std::size_t>(idx)];
        }
    }
    double total = 0.0;
    for (long long k = 0; k < K; ++k)
        for (long long l = 0; l < L; ++l) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t p = 0; p < P; ++p)
                acc += b[p].second * xs[p][static_cast<std::size_t>(k)] *
                       ys[p][static_cast<std::size_t>(l)];
            total += std::norm(acc);
        }
    return total;
}

}  // namespace cbrt2

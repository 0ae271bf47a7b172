#include <cmath>

#include "cbrt2/sieve.hpp"
#include "doctest.h"

using namespace cbrt2;

namespace {

// Literal nested double sum, m then nu then k then l, no factoring. The
// production evaluator regroups; both must agree to the documented 1e-9.
double lhs_direct(long long M, const CoeffSeq& s) {
    double total = 0.0;
    const double twopi = 8.0 * std::atan(1.0);
    for (const RootPair& p : enumerate_root_pairs(M)) {
        std::complex<double> acc{0.0, 0.0};
        for (long long k = 1; k <= s.K; ++k)
            for (long long l = 1; l <= s.L; ++l) {
                long long t = (detail::mulmod(k, p.nu, p.m) +
                               detail::mulmod(l, detail::mulmod(p.nu, p.nu, p.m), p.m)) %
                              p.m;
                acc += s.value(k, l) * std::polar(1.0, twopi * static_cast<double>(t) /
                                                           static_cast<double>(p.m));
            }
        total += std::norm(acc);
    }
    return total;
}

}  // namespace

TEST_CASE("hand case: M=5, K=L=1, ones") {
    CoeffSeq s = make_ones(1, 1);
    double lhs = sieve_lhs(5, s);
    CHECK(lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sieve_rhs(5, s) == doctest::Approx(36.0));
    SieveReport r = sieve_ratio(5, s);
    CHECK(r.ratio == doctest::Approx(2.0 / 36.0).epsilon(1e-12));
    CHECK(r.pair_count == 2);
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS((void)sieve_rhs(0, make_ones(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)sieve_lhs(-3, make_ones(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)make_ones(0, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)make_spike(5, 2, 4, 4), std::invalid_argument);
    CoeffSeq degenerate;
    degenerate.K = 2;
    degenerate.L = 2;
    degenerate.dense.assign(4, {0.0, 0.0});
    CHECK_THROWS_AS((void)sieve_ratio(5, degenerate), std::domain_error);
}

TEST_CASE("make_random: deterministic, counter-based") {
    CoeffSeq a = make_random(16, 16, 42);
    CoeffSeq b = make_random(16, 16, 42);
    CHECK(a.signs == b.signs);
    CoeffSeq c = make_random(16, 16, 43);
    CHECK(a.signs != c.signs);
    for (double v : a.signs)
        CHECK(std::fabs(v) == 1.0);
    // roughly balanced
    double sum = 0;
    for (double v : a.signs)
        sum += v;
    CHECK(std::fabs(sum) < 64);
}

TEST_CASE("grouped evaluation matches the literal double sum") {
    for (auto seq : {make_ones(7, 5), make_spike(6, 2, 7, 5), make_random(7, 5, 1)}) {
        double a = sieve_lhs(5, seq);
        double b = lhs_direct(5, seq);
        CHECK(a == doctest::Approx(b).epsilon(1e-9));
        a = sieve_lhs(37, seq);
        b = lhs_direct(37, seq);
        CHECK(a == doctest::Approx(b).epsilon(1e-9));
    }
}

TEST_CASE("spike: the tuned term alone reaches (KL)^2") {
    // (6,2) lies in (5, 10]
    CoeffSeq s = make_spike(6, 2, 8, 8);
    double lhs = sieve_lhs(5, s);
    CHECK(lhs >= 64.0 * 64.0 * (1.0 - 1e-9));
    // spike at (6,2), K=L=1: a_{1,1} = e(-6/6) = 1
    CoeffSeq s1 = make_spike(6, 2, 1, 1);
    CHECK(s1.value(1, 1).real() == doctest::Approx(1.0));
    CHECK(s1.value(1, 1).imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spike with K, L >= M achieves ratio >= 1/4 up to epsilon") {
    auto pairs = enumerate_root_pairs(16);
    REQUIRE(!pairs.empty());
    CoeffSeq s = make_spike(pairs.front().m, pairs.front().nu, 16, 16);
    SieveReport r = sieve_ratio(16, s);
    CHECK(r.ratio >= 0.05);
}

TEST_CASE("scaling invariance of the ratio") {
    for (auto seq : {make_ones(6, 9), make_random(6, 9, 5)}) {
        SieveReport base = sieve_ratio(8, seq);
        SieveReport s1 = sieve_ratio(8, scaled(seq, {3.25, 0.0}));
        SieveReport s2 = sieve_ratio(8, scaled(seq, {-0.7, 1.9}));
        CHECK(s1.ratio == doctest::Approx(base.ratio).epsilon(1e-9));
        CHECK(s2.ratio == doctest::Approx(base.ratio).epsilon(1e-9));
    }
}

TEST_CASE("dual form: examples") {
    // single pair (6,2), K=L=1: |e((2+4)/6)|^2 = 1
    std::vector<std::pair<RootPair, std::complex<double>>> b = {{{6, 2}, {1.0, 0.0}}};
    CHECK(dual_lhs(5, 1, 1, b) == doctest::Approx(1.0));
    CHECK(dual_lhs(5, 4, 4, {}) == doctest::Approx(0.0));
    std::vector<std::pair<RootPair, std::complex<double>>> bad = {{{3, 2}, {1.0, 0.0}}};
    CHECK_THROWS_AS((void)dual_lhs(5, 1, 1, bad), std::invalid_argument);
}

TEST_CASE("dual ratio is finite and comparable for a point mass") {
    long long M = 64, K = 64, L = 64;
    auto pairs = enumerate_root_pairs(M);
    std::vector<std::pair<RootPair, std::complex<double>>> b = {{pairs.front(), {1.0, 0.0}}};
    double lhs = dual_lhs(M, K, L, b);
    double rhs = static_cast<double>(M + K) * static_cast<double>(M + L) * 1.0;
    double ratio = lhs / rhs;
    CHECK(ratio > 0.0);
    CHECK(ratio < 10.0);
}

TEST_CASE("lhs is invariant under representation of the same sequence") {
    // ones as product form vs as dense complex
    CoeffSeq ones = make_ones(9, 4);
    CoeffSeq dense;
    dense.K = 9;
    dense.L = 4;
    dense.dense.assign(36, {1.0, 0.0});
    dense.descriptor = "ones-dense";
    double a = sieve_lhs(21, ones);
    double b = sieve_lhs(21, dense);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

#include <cmath>
#include <random>

#include "cbrt2/rational.hpp"
#include "cbrt2/torus.hpp"
#include "doctest.h"

using namespace cbrt2;

namespace {

std::mt19937_64 rng(31337);

// Shortest nonzero vector by direct enumeration over a coefficient box that
// provably contains it: any w with |w| <= |v1| has |x| <= |v1||v2|/|det|,
// |y| <= |v1|^2/|det| (Cramer on the original basis).
long long exhaustive_min_norm2(const Lattice2& L) {
    long double n1 = sqrtl((long double)L.v1[0] * L.v1[0] + (long double)L.v1[1] * L.v1[1]);
    long double n2 = sqrtl((long double)L.v2[0] * L.v2[0] + (long double)L.v2[1] * L.v2[1]);
    long double shorter = std::min(n1, n2);
    long long det = L.det();
    long long bx = static_cast<long long>(shorter * n2 / std::abs(det)) + 1;
    long long by = static_cast<long long>(shorter * n1 / std::abs(det)) + 1;
    long long best = -1;
    for (long long x = -bx; x <= bx; ++x)
        for (long long y = -by; y <= by; ++y) {
            if (x == 0 && y == 0)
                continue;
            long long vx = x * L.v1[0] + y * L.v2[0];
            long long vy = x * L.v1[1] + y * L.v2[1];
            long long n = vx * vx + vy * vy;
            if (best < 0 || n < best)
                best = n;
        }
    return best;
}

}  // namespace

TEST_CASE("torus_distance: examples") {
    CHECK(torus_distance({0, 0}, {0.5, 0.5}) == doctest::Approx(std::sqrt(2.0) / 2));
    CHECK(torus_distance({0.9, 0}, {0.1, 0}) == doctest::Approx(0.2));
    CHECK(torus_distance({0.3, 0.7}, {0.3, 0.7}) == doctest::Approx(0.0));
    CHECK(torus_distance_sup({0.9, 0.5}, {0.1, 0.6}) == doctest::Approx(0.2));
}

TEST_CASE("make_torsion normalizes") {
    TorsionPoint t = make_torsion(2, 4, 6);
    CHECK(t == make_torsion(1, 2, 3));
    CHECK(t.q == 3);
    CHECK(make_torsion(-1, 5, 3) == make_torsion(2, 2, 3));
    CHECK_THROWS_AS((void)make_torsion(1, 1, 0), std::invalid_argument);
}

TEST_CASE("line_lattice: examples") {
    Lattice2 L = line_lattice(make_torsion(0, 0, 1));
    CHECK(std::abs(L.det()) == 1);
    L = line_lattice(make_torsion(1, 2, 3));
    CHECK(std::abs(L.det()) == 3);
    for (auto v : {L.v1, L.v2})
        CHECK((v[0] * 1 + v[1] * 2) % 3 == 0);
    L = line_lattice(make_torsion(1, 1, 2));
    CHECK(std::abs(L.det()) == 2);
    for (auto v : {L.v1, L.v2})
        CHECK((v[0] + v[1]) % 2 == 0);
}

TEST_CASE("line_lattice membership is exactly the congruence, exhaustively") {
    std::uniform_int_distribution<long long> dq(1, 50);
    for (int it = 0; it < 150; ++it) {
        long long q = dq(rng);
        std::uniform_int_distribution<long long> dr(0, q - 1);
        long long r = dr(rng), s = dr(rng);
        long long g = std::gcd(std::gcd(r, s), q);
        r /= g;
        s /= g;
        q /= g;
        TorsionPoint t = make_torsion(r, s, q);
        Lattice2 L = line_lattice(t);
        CHECK(std::abs(L.det()) == t.q);
        long long det = L.det();
        for (long long A = -t.q; A <= t.q; ++A)
            for (long long B = -t.q; B <= t.q; ++B) {
                bool in_congruence = (A * t.r + B * t.s) % t.q == 0;
                // (A,B) in span: Cramer coefficients must be integers
                long long cx = A * L.v2[1] - B * L.v2[0];
                long long cy = B * L.v1[0] - A * L.v1[1];
                bool in_span = cx % det == 0 && cy % det == 0;
                CHECK(in_congruence == in_span);
            }
    }
}

TEST_CASE("gauss_reduce: examples") {
    CHECK(detail::norm2(gauss_reduce({{1, -1}, {1, 1}}).shortest) == 2);
    CHECK(detail::norm2(gauss_reduce({{1, 0}, {0, 1}}).shortest) == 1);
    CHECK(detail::norm2(gauss_reduce({{3, 0}, {1, 1}}).shortest) == 2);
    CHECK_THROWS_AS((void)gauss_reduce({{2, 4}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("gauss_reduce equals exhaustive shortest vector on random lattices") {
    std::uniform_int_distribution<long long> d(-1000, 1000);
    int done = 0;
    while (done < 1000) {
        Lattice2 L{{d(rng), d(rng)}, {d(rng), d(rng)}};
        if (L.det() == 0)
            continue;
        // keep the enumeration box reasonable
        long double n1 = hypotl(L.v1[0], L.v1[1]), n2 = hypotl(L.v2[0], L.v2[1]);
        if (std::min(n1, n2) * std::max(n1, n2) / std::abs(L.det()) > 150)
            continue;
        auto red = gauss_reduce(L);
        CHECK(detail::norm2(red.shortest) == exhaustive_min_norm2(L));
        // reduced basis spans the same lattice
        CHECK(std::abs(red.basis.det()) == std::abs(L.det()));
        ++done;
    }
}

TEST_CASE("min_line_norm: examples") {
    CHECK(min_line_norm(make_torsion(0, 0, 1)) == doctest::Approx(1.0));
    CHECK(min_line_norm(make_torsion(1, 1, 2)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(min_line_norm(make_torsion(1, 2, 3)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("torsion_spacing_bound: examples") {
    CHECK(torsion_spacing_bound(make_torsion(1, 2, 3), 3) ==
          doctest::Approx(std::sqrt(2.0) / 9.0));
    CHECK(torsion_spacing_bound(make_torsion(0, 0, 1), 7) == doctest::Approx(1.0 / 7.0));
    CHECK(torsion_spacing_bound(make_torsion(1, 1, 2), 2) ==
          doctest::Approx(std::sqrt(2.0) / 4.0));
    CHECK_THROWS_AS((void)torsion_spacing_bound(make_torsion(1, 1, 2), 0),
                    std::invalid_argument);
}

TEST_CASE("spacing bound holds exhaustively for small torsion, exact rationals") {
    std::vector<TorsionPoint> pts;
    for (long long q = 1; q <= 8; ++q)
        for (long long r = 0; r < q; ++r)
            for (long long s = 0; s < q; ++s)
                if (std::gcd(std::gcd(r, s), q) == 1)
                    pts.push_back(TorsionPoint{r, s, q});
    for (const auto& t : pts) {
        Integer mln2(min_line_norm_sq(t));
        for (const auto& t1 : pts) {
            if (t == t1)
                continue;
            Rational dx = frac_distance(Rational(Integer(t.r), Integer(t.q)) -
                                        Rational(Integer(t1.r), Integer(t1.q)));
            Rational dy = frac_distance(Rational(Integer(t.s), Integer(t.q)) -
                                        Rational(Integer(t1.s), Integer(t1.q)));
            Rational d2 = dx * dx + dy * dy;
            for (long long Q = t1.q; Q <= 8; ++Q) {
                Rational bound2(mln2, Integer(t.q * Q) * Integer(t.q * Q));
                CHECK(bound2 <= d2);
            }
        }
    }
}

TEST_CASE("approx_lattices: examples and consistency with line lattices") {
    GammaData g = make_gamma(CubicInt{1, 1, -1});
    auto lats = approx_lattices(g);
    CHECK(lats[0].v1 == std::array<long long, 2>{1, -1});
    CHECK(lats[0].v2 == std::array<long long, 2>{1, 1});
    CHECK(std::abs(lats[0].det()) == 2);  // g3
    CHECK(std::abs(lats[1].det()) == 1);  // g2
    CHECK(lats[2].v1 == std::array<long long, 2>{1, 1});
    CHECK(lats[2].v2 == std::array<long long, 2>{-2, 1});
    CHECK(std::abs(lats[2].det()) == 3);  // g1

    // the span lattice is the full lattice of integral lines through each
    // approximation point: shortest vectors must agree with the
    // congruence-built lattice
    for (const auto& [x, p] : enumerate_generators(120)) {
        GammaData gd = make_gamma(x);
        auto pts = approximations(gd);
        auto ls = approx_lattices(gd);
        CofactorTriple cf = cofactor(x);
        CHECK(Integer(std::abs(ls[0].det())) == cf.g3);
        CHECK(Integer(std::abs(ls[1].det())) == cf.g2);
        CHECK(Integer(std::abs(ls[2].det())) == cf.g1);
        for (int i = 0; i < 3; ++i) {
            TorsionPoint t = make_torsion(pts[i].n1.to_int64(), pts[i].n2.to_int64(),
                                          pts[i].den.to_int64());
            CHECK(t.q == pts[i].den.to_int64());  // coprime triple
            CHECK(min_line_norm_sq(t) ==
                  static_cast<long long>(detail::norm2(gauss_reduce(ls[i]).shortest)));
        }
    }
}

TEST_CASE("disc_count_stats: examples") {
    CHECK(disc_count_stats({{0.2, 0.2}}, 0.01).max_count == 1);
    CHECK(disc_count_stats({{0.2, 0.2}, {0.2 + 0.03, 0.2}}, 0.01).max_count == 1);
    CHECK(disc_count_stats({{0.2, 0.2}, {0.215, 0.2}}, 0.01).max_count == 2);
    CHECK_THROWS_AS((void)disc_count_stats({{0.1, 0.1}}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS((void)disc_count_stats({{0.1, 0.1}}, 0.0), std::invalid_argument);

    auto st = disc_count_stats({{0.0, 0.0}, {0.5, 0.5}, {0.5001, 0.5}}, 0.01);
    CHECK(st.max_count == 2);
    CHECK(st.histogram.at(1) == 1);
    CHECK(st.histogram.at(2) == 2);
}

TEST_CASE("dominating statistic bounds the exact disc count") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int it = 0; it < 40; ++it) {
        std::vector<TorusPoint> pts;
        int n = 3 + static_cast<int>(u(rng) * 12);
        for (int i = 0; i < n; ++i)
            pts.push_back(TorusPoint::wrap(u(rng), u(rng)));
        double radius = 0.02 + 0.2 * u(rng);
        if (radius >= 0.25)
            radius = 0.24;
        long long exact = exact_max_disc_count(pts, radius);
        long long dominating = disc_count_stats(pts, radius).max_count;
        CHECK(exact <= dominating);
        CHECK(exact >= 1);
    }
    // wraparound pair caught by a disc across the seam
    std::vector<TorusPoint> seam = {{0.99, 0.5}, {0.01, 0.5}};
    CHECK(exact_max_disc_count(seam, 0.02) == 2);
}

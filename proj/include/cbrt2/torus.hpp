#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "cbrt2/parametrize.hpp"

namespace cbrt2 {

/// Point of R^2/Z^2 with coordinates reduced to [0,1).
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;

    static TorusPoint wrap(double x, double y) {
        x -= std::floor(x);
        y -= std::floor(y);
        if (x >= 1.0)
            x = 0.0;
        if (y >= 1.0)
            y = 0.0;
        return {x, y};
    }
};

namespace detail {
inline double wrap_delta(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}
}  // namespace detail

/// Euclidean distance on the torus (projection metric).
inline double torus_distance(const TorusPoint& p, const TorusPoint& q) {
    double dx = detail::wrap_delta(p.x, q.x);
    double dy = detail::wrap_delta(p.y, q.y);
    return std::sqrt(dx * dx + dy * dy);
}

/// Sup-metric variant, per-coordinate wraparound.
inline double torus_distance_sup(const TorusPoint& p, const TorusPoint& q) {
    return std::max(detail::wrap_delta(p.x, q.x), detail::wrap_delta(p.y, q.y));
}

/// q-torsion point (r/q, s/q); canonical form has gcd(r,s,q) = 1, q >= 1 and
/// residues in [0,q). Construct through make_torsion.
struct TorsionPoint {
    long long r = 0;
    long long s = 0;
    long long q = 1;

    friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
        return a.r == b.r && a.s == b.s && a.q == b.q;
    }
    TorusPoint to_torus() const {
        return {static_cast<double>(r) / q, static_cast<double>(s) / q};
    }
};

inline TorsionPoint make_torsion(long long r, long long s, long long q) {
    if (q < 1)
        throw std::invalid_argument("make_torsion: q must be positive");
    r %= q;
    if (r < 0)
        r += q;
    s %= q;
    if (s < 0)
        s += q;
    long long d = std::gcd(std::gcd(r, s), q);
    r /= d;
    s /= d;
    q /= d;
    return {r % q, s % q, q};
}

/// Rank-2 integer lattice given by two basis vectors.
struct Lattice2 {
    std::array<long long, 2> v1{1, 0};
    std::array<long long, 2> v2{0, 1};

    long long det() const { return v1[0] * v2[1] - v1[1] * v2[0]; }
};

namespace detail {
inline __int128 norm2(const std::array<long long, 2>& v) {
    return static_cast<__int128>(v[0]) * v[0] + static_cast<__int128>(v[1]) * v[1];
}
inline __int128 dot2(const std::array<long long, 2>& a, const std::array<long long, 2>& b) {
    return static_cast<__int128>(a[0]) * b[0] + static_cast<__int128>(a[1]) * b[1];
}
}  // namespace detail

struct GaussReduced {
    std::array<long long, 2> shortest;
    Lattice2 basis;
};

/// Lagrange-Gauss reduction; the returned first vector attains the lattice
/// minimum in the Euclidean norm.
inline GaussReduced gauss_reduce(const Lattice2& L) {
    if (L.det() == 0)
        throw std::invalid_argument("gauss_reduce: degenerate basis");
    std::array<long long, 2> a = L.v1, b = L.v2;
    if (detail::norm2(a) > detail::norm2(b))
        std::swap(a, b);
    while (true) {
        __int128 n = detail::norm2(a);
        __int128 d = detail::dot2(a, b);
        // nearest integer to d/n, exact
        __int128 two_d = 2 * d;
        long long mu = static_cast<long long>((two_d >= 0 ? two_d + n : two_d - n) / (2 * n));
        b = {b[0] - mu * a[0], b[1] - mu * a[1]};
        if (detail::norm2(b) >= detail::norm2(a))
            return {a, Lattice2{a, b}};
        std::swap(a, b);
    }
}

/// Lattice of integral lines through (r/q, s/q):
/// {(A,B) in Z^2 : A*r + B*s = 0 (mod q)}, index q in Z^2.
inline Lattice2 line_lattice(const TorsionPoint& t) {
    long long d = std::gcd(t.r, t.q);
    long long qd = t.q / d;
    Lattice2 L;
    if (qd == 1) {
        L.v1 = {1, 0};
        L.v2 = {0, d};
    } else {
        long long rd = (t.r / d) % qd;
        long long a0 = detail::mulmod((qd - t.s % qd) % qd, detail::invmod(rd, qd), qd);
        L.v1 = {qd, 0};
        L.v2 = {a0, d};
    }
    return L;
}

/// Squared length of the shortest integral line through t.
inline long long min_line_norm_sq(const TorsionPoint& t) {
    auto g = gauss_reduce(line_lattice(t));
    return static_cast<long long>(detail::norm2(g.shortest));
}

inline double min_line_norm(const TorsionPoint& t) {
    return std::sqrt(static_cast<double>(min_line_norm_sq(t)));
}

/// Lower bound min_line_norm(t)/(q*Q) on the torus distance from t to any
/// distinct torsion point of torsion <= Q.
inline double torsion_spacing_bound(const TorsionPoint& t, long long Q) {
    if (Q < 1)
        throw std::invalid_argument("torsion_spacing_bound: Q must be positive");
    return min_line_norm(t) / (static_cast<double>(t.q) * static_cast<double>(Q));
}

/// The integral-line lattices of the three approximation points:
/// span{(b,c),(a,b)}, span{(2c,a),(b,c)}, span{(a,b),(2c,a)}, with
/// |det| = g3, g2, g1 respectively.
inline std::array<Lattice2, 3> approx_lattices(const GammaData& g) {
    long long a = g.a.to_int64(), b = g.b.to_int64(), c = g.c.to_int64();
    return {Lattice2{{b, c}, {a, b}}, Lattice2{{2 * c, a}, {b, c}}, Lattice2{{a, b}, {2 * c, a}}};
}

struct DiscStats {
    long long max_count = 0;
    std::map<long long, long long> histogram;  // neighbor count -> #points
};

/// Dominating disc statistic: for each point p, the number of points within
/// 2*radius of p (p itself included). Any disc of the given radius containing
/// k points forces some p with count >= k, so max_count bounds every disc
/// count from above.
inline DiscStats disc_count_stats(const std::vector<TorusPoint>& pts, double radius) {
    if (!(radius > 0.0 && radius < 0.25))
        throw std::invalid_argument("disc_count_stats: radius must lie in (0, 1/4)");
    DiscStats st;
    const double limit = 2.0 * radius;
    const double limit_sq = limit * limit;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        long long cnt = 0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double dx = detail::wrap_delta(pts[i].x, pts[j].x);
            double dy = detail::wrap_delta(pts[i].y, pts[j].y);
            if (dx * dx + dy * dy <= limit_sq)
                ++cnt;
        }
        st.max_count = std::max(st.max_count, cnt);
        st.histogram[cnt]++;
    }
    return st;
}

/// Exact maximum number of points in any closed disc of the given radius,
/// by the standard reduction: an optimal disc can be slid until its boundary
/// passes through one or two points. Cubic cost; for small validation
/// instances only.
inline long long exact_max_disc_count(const std::vector<TorusPoint>& pts, double radius) {
    if (!(radius > 0.0 && radius < 0.25))
        throw std::invalid_argument("exact_max_disc_count: radius must lie in (0, 1/4)");
    if (pts.empty())
        return 0;
    const double eps = 1e-12;
    auto count_at = [&](double cx, double cy) {
        TorusPoint ctr = TorusPoint::wrap(cx, cy);
        long long n = 0;
        for (const auto& p : pts)
            if (torus_distance(ctr, p) <= radius + eps)
                ++n;
        return n;
    };
    long long best = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        best = std::max(best, count_at(pts[i].x, pts[i].y));
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            // minimal-image displacement from i to j
            double dx = pts[j].x - pts[i].x;
            dx -= std::round(dx);
            double dy = pts[j].y - pts[i].y;
            dy -= std::round(dy);
            double d2 = dx * dx + dy * dy;
            if (d2 > 4.0 * radius * radius + eps || d2 == 0.0)
                continue;
            double d = std::sqrt(d2);
            double h = std::sqrt(std::max(0.0, radius * radius - d2 / 4.0));
            double mx = pts[i].x + dx / 2, my = pts[i].y + dy / 2;
            // two discs whose boundary passes through both points
            for (double sgn : {1.0, -1.0}) {
                double cx = mx + sgn * h * (-dy / d);
                double cy = my + sgn * h * (dx / d);
                best = std::max(best, count_at(cx, cy));
            }
        }
    }
    return best;
}

}  // namespace cbrt2

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cbrt2 {

/// A modulus m together with a residue nu satisfying nu^3 = 2 (mod m).
struct RootPair {
    long long m = 1;
    long long nu = 0;

    friend bool operator==(const RootPair& x, const RootPair& y) {
        return x.m == y.m && x.nu == y.nu;
    }
    friend bool operator<(const RootPair& x, const RootPair& y) {
        return x.m != y.m ? x.m < y.m : x.nu < y.nu;
    }
};

namespace detail {

inline long long mulmod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

inline long long powmod(long long base, long long exp, long long m) {
    if (m == 1)
        return 0;
    long long r = 1;
    base %= m;
    if (base < 0)
        base += m;
    while (exp > 0) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline long long invmod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = a % m;
    if (a1 < 0)
        a1 += m;
    long long b = a1;
    long long q, t;
    while (b != 0) {
        q = g / b;
        t = g - q * b;
        g = b;
        b = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1)
        throw std::domain_error("invmod: not invertible");
    return x < 0 ? x + m : x;
}

inline bool is_root(long long nu, long long m) {
    long long c = mulmod(mulmod(nu, nu, m), nu, m);
    return c == 2 % m;
}

/// Cube roots of 2 mod an odd prime p >= 5, via the Adleman-Manders-Miller
/// cube-root algorithm when p = 1 (mod 3).
inline std::vector<long long> cube_roots_of_two_mod_p(long long p) {
    if (p % 3 == 2) {
        // cubing is a bijection; invert the exponent
        long long e = invmod(3 % (p - 1), p - 1);
        long long r = powmod(2, e, p);
        return {r};
    }
    long long t = p - 1;
    int s = 0;
    while (t % 3 == 0) {
        t /= 3;
        ++s;
    }
    if (powmod(2, (p - 1) / 3, p) != 1)
        return {};  // 2 is not a cubic residue
    // non-cube z, deterministic scan
    long long z = 2;
    while (powmod(z, (p - 1) / 3, p) == 1)
        ++z;
    long long g = powmod(z, t, p);  // order 3^s
    long long omega = g;
    for (int i = 0; i < s - 1; ++i)
        omega = mulmod(omega, mulmod(omega, omega, p), p);  // g^(3^(s-1))
    long long beta = invmod(3 % t, t);
    long long j = (3 * beta - 1) / t;
    long long x0 = powmod(2, beta, p);
    // discrete log of A = 2^t in <g^3> (order 3^(s-1)), base-3 digits
    long long A = powmod(2, t, p);
    long long h = powmod(g, 3, p);
    long long k = 0;
    long long pw3 = 1;  // 3^i
    for (int i = 0; i + 1 < s; ++i) {
        long long rem = mulmod(A, powmod(invmod(h, p), k, p), p);
        long long e3 = 1;  // 3^(s-2-i)
        for (int q = 0; q < s - 2 - i; ++q)
            e3 *= 3;
        long long w = powmod(rem, e3, p);
        long long d;
        if (w == 1)
            d = 0;
        else if (w == omega)
            d = 1;
        else
            d = 2;
        k += d * pw3;
        pw3 *= 3;
    }
    long long kj = mulmod(k % (p - 1), j % (p - 1), p - 1);
    long long x = mulmod(x0, powmod(invmod(g, p), kj, p), p);
    long long r2 = mulmod(x, omega, p);
    long long r3 = mulmod(r2, omega, p);
    std::vector<long long> rs = {x, r2, r3};
    std::sort(rs.begin(), rs.end());
    return rs;
}

/// Roots of x^3 = 2 mod p^e. Hensel lifting when the derivative 3*nu^2 is a
/// unit (p not in {2,3}); exhaustive scan for the degenerate small primes.
inline std::vector<long long> roots_mod_prime_power(long long p, int e, long long pe) {
    if (p == 2 || p == 3) {
        std::vector<long long> out;
        for (long long x = 0; x < pe; ++x)
            if (is_root(x, pe))
                out.push_back(x);
        return out;
    }
    std::vector<long long> rs = cube_roots_of_two_mod_p(p);
    long long q = p;
    for (int i = 1; i < e; ++i) {
        long long q2 = q * p;
        for (auto& r : rs) {
            // r' = r - f(r) * inv(f'(r)) mod q2
            long long fr = (mulmod(mulmod(r, r, q2), r, q2) - 2 % q2 + q2) % q2;
            long long dfr = mulmod(3, mulmod(r, r, q2), q2);  // a unit: p >= 5 and p∤r
            r = (r - mulmod(fr, invmod(dfr, q2), q2) % q2 + q2) % q2;
        }
        q = q2;
    }
    std::sort(rs.begin(), rs.end());
    return rs;
}

struct Factor {
    long long p;
    int e;
    long long pe;
};

inline std::vector<Factor> factorize(long long m) {
    std::vector<Factor> fs;
    for (long long d : {2LL, 3LL}) {
        if (m % d == 0) {
            Factor f{d, 0, 1};
            while (m % d == 0) {
                m /= d;
                f.e++;
                f.pe *= d;
            }
            fs.push_back(f);
        }
    }
    for (long long d = 5; d * d <= m; d += (d % 6 == 5 ? 2 : 4)) {
        if (m % d == 0) {
            Factor f{d, 0, 1};
            while (m % d == 0) {
                m /= d;
                f.e++;
                f.pe *= d;
            }
            fs.push_back(f);
        }
    }
    if (m > 1)
        fs.push_back({m, 1, m});
    return fs;
}

}  // namespace detail

inline bool is_valid_root_pair(const RootPair& p) {
    if (p.m < 1 || p.nu < 0 || p.nu >= p.m)
        return false;
    return detail::is_root(p.nu, p.m);
}

/// All residues nu in [0, m) with nu^3 = 2 (mod m), by exhaustive scan.
/// This is the oracle everything else is checked against.
inline std::vector<long long> roots_bruteforce(long long m) {
    if (m <= 0)
        throw std::invalid_argument("roots_bruteforce: m must be positive");
    std::vector<long long> out;
    long long target = 2 % m;
    for (long long nu = 0; nu < m; ++nu)
        if (detail::mulmod(detail::mulmod(nu, nu, m), nu, m) == target)
            out.push_back(nu);
    return out;
}

/// Same output as roots_bruteforce, via factorization, per-prime-power root
/// finding and Chinese remaindering.
inline std::vector<long long> roots_fast(long long m) {
    if (m <= 0)
        throw std::invalid_argument("roots_fast: m must be positive");
    if (m == 1)
        return {0};
    std::vector<long long> acc = {0};
    long long acc_mod = 1;
    for (const auto& f : detail::factorize(m)) {
        auto rs = detail::roots_mod_prime_power(f.p, f.e, f.pe);
        if (rs.empty())
            return {};
        std::vector<long long> next;
        next.reserve(acc.size() * rs.size());
        long long inv1 = detail::invmod(acc_mod % f.pe, f.pe);
        for (long long x : acc)
            for (long long r : rs) {
                // x' = x + acc_mod * ((r - x) * inv1 mod pe)
                long long d = ((r - x) % f.pe + f.pe) % f.pe;
                next.push_back(x + acc_mod * detail::mulmod(d, inv1, f.pe));
            }
        acc = std::move(next);
        acc_mod *= f.pe;
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

/// All root pairs with M < m <= 2M, ordered by (m, nu).
inline std::vector<RootPair> enumerate_root_pairs(long long M) {
    if (M < 1)
        throw std::invalid_argument("enumerate_root_pairs: M must be positive");
    std::vector<RootPair> out;
    for (long long m = M + 1; m <= 2 * M; ++m)
        for (long long nu : roots_fast(m))
            out.push_back({m, nu});
    return out;
}

}  // namespace cbrt2

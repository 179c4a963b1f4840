// oracles.hpp
// Brute-force reference implementations. Deliberately naive and independent
// of the library code paths they are used to check.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline u64 pi(u64 x) {
    u64 c = 0;
    for (u64 n = 2; n <= x; ++n) c += is_prime(n);
    return c;
}

// Least m >= 1 with 2^m = 1 mod d, by scanning.
inline u64 order2(u64 d) {
    if (d == 1) return 1;
    u64 v = 2 % d;
    for (u64 m = 1;; ++m) {
        if (v == 1) return m;
        v = v * 2 % d;
    }
}

inline u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    for (u64 i = 0; i < e; ++i) r = static_cast<u64>((unsigned __int128)r * b % m);
    return r;
}

inline int mobius(u64 d) {
    int mu = 1;
    for (u64 p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        d /= p;
        if (d % p == 0) return 0;
        mu = -mu;
    }
    if (d > 1) mu = -mu;
    return mu;
}

inline u64 largest_prime_factor(u64 d) {
    u64 best = 1;
    for (u64 p = 2; p * p <= d; ++p)
        while (d % p == 0) {
            best = p;
            d /= p;
        }
    return d > 1 ? d : best;
}

// Twin-style pairs (p, p + h), both prime, p + h <= x.
inline u64 prime_pairs(u64 x, u64 h) {
    u64 c = 0;
    for (u64 p = 2; p + h <= x; ++p) c += is_prime(p) && is_prime(p + h);
    return c;
}

// r(n) = #{(p, a) : p + a = n} for a from `sums`.
inline u64 r_of(u64 n, const std::vector<u64>& sums) {
    u64 c = 0;
    for (u64 a : sums)
        if (a < n && is_prime(n - a)) ++c;
    return c;
}

}  // namespace oracle

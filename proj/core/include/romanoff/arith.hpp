// arith.hpp
// Exact integer primitives: modular powering, the multiplicative order of 2
// modulo odd d, Moebius function, largest prime factor, factorization and
// exact integer q-th roots.
//
// Factorization uses a smallest-prime-factor table (built once, read-only
// afterwards) for inputs up to the table bound, and Pollard rho with a
// deterministic Miller-Rabin test above it. All functions are pure and safe
// to call concurrently.

#pragma once

#include "romanoff/types.hpp"

#include <utility>
#include <vector>

namespace romanoff {

// (d, e2(d), P+(d), mu(d)) for odd d.
struct OrderRecord {
    u64 d = 1;
    u64 e2 = 1;
    u64 pplus = 1;
    int mu = 1;
};

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

u64 mul_mod(u64 a, u64 b, u64 modulus);

// base^exp mod modulus with 128-bit intermediate products.
// Throws DomainError when modulus == 0.
u64 pow_mod(u64 base, u64 exp, u64 modulus);

// Deterministic for every 64-bit input.
bool is_prime_u64(u64 n);

// Prime factorization in increasing prime order; factorize(1) is empty.
std::vector<PrimePower> factorize(u64 n);

// Least m >= 1 with d | 2^m - 1; e2(1) = 1. Throws DomainError for even d.
// Computed from the Carmichael exponent of d by dividing out prime factors
// while 2^(m/q) stays 1 mod d.
u64 mult_order2(u64 d);

int mobius(u64 d);

// P+(d), with the convention P+(1) = 1.
u64 largest_prime_factor(u64 d);

OrderRecord order_record(u64 d);

// floor(n^(1/q)) by Newton iteration followed by an exact correction, so the
// result v always satisfies v^q <= n < (v+1)^q.
BigInt int_root(const BigInt& n, unsigned q);
u128 int_root(u128 n, unsigned q);

// Smallest-prime-factor table bound used by factorize. Must be set before the
// first factorization; later calls have no effect. Default 10^7.
void set_factor_table_bound(u64 bound);
u64 factor_table_bound();

}  // namespace romanoff

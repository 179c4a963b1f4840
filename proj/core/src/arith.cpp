// arith.cpp

#include "romanoff/arith.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

namespace romanoff {

namespace {

// -------------------------------------------------------
// Smallest-prime-factor table
// -------------------------------------------------------

u64 g_table_bound = 10'000'000;
std::once_flag g_table_once;
std::vector<std::uint32_t> g_spf;

const std::vector<std::uint32_t>& spf_table() {
    std::call_once(g_table_once, [] {
        const u64 n = g_table_bound;
        g_spf.assign(n + 1, 0);
        for (u64 i = 2; i <= n; ++i) {
            if (g_spf[i] != 0) continue;
            g_spf[i] = static_cast<std::uint32_t>(i);
            if (i > n / i) continue;
            for (u64 j = i * i; j <= n; j += i)
                if (g_spf[j] == 0) g_spf[j] = static_cast<std::uint32_t>(i);
        }
    });
    return g_spf;
}

// -------------------------------------------------------
// Pollard rho (Brent) for inputs above the table
// -------------------------------------------------------

u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    const auto& spf = spf_table();
    if (n < spf.size()) {
        while (n > 1) {
            primes.push_back(spf[n]);
            n /= spf[n];
        }
        return;
    }
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n == 1) return;
    if (n < spf.size()) return factor_into(n, primes);
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    const u64 f = pollard_brent(n);
    factor_into(f, primes);
    factor_into(n / f, primes);
}

// v^q <= n, without overflow.
bool pow_le(u128 v, unsigned q, u128 n) {
    u128 acc = 1;
    for (unsigned i = 0; i < q; ++i) {
        if (v != 0 && acc > n / v) return false;
        acc *= v;
    }
    return acc <= n;
}

unsigned bit_length(u128 n) {
    const auto hi = static_cast<u64>(n >> 64);
    if (hi != 0) return 128 - static_cast<unsigned>(std::countl_zero(hi));
    return 64 - static_cast<unsigned>(std::countl_zero(static_cast<u64>(n)));
}

}  // namespace

void set_factor_table_bound(u64 bound) { g_table_bound = std::max<u64>(bound, 16); }
u64 factor_table_bound() { return g_table_bound; }

u64 mul_mod(u64 a, u64 b, u64 modulus) {
    return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

u64 pow_mod(u64 base, u64 exp, u64 modulus) {
    if (modulus == 0) throw DomainError("pow_mod: modulus must be positive");
    u64 result = 1 % modulus;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    std::vector<u64> primes;
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

u64 mult_order2(u64 d) {
    if (d == 0 || d % 2 == 0) throw DomainError("mult_order2: d must be odd and positive");
    if (d == 1) return 1;

    // Carmichael exponent lambda(d) = lcm of phi(p^a) over odd prime powers.
    const auto fac = factorize(d);
    u64 lambda = 1;
    std::vector<u64> candidates;
    for (const auto& [p, a] : fac) {
        u64 phi = p - 1;
        for (unsigned i = 1; i < a; ++i) phi *= p;
        lambda = std::lcm(lambda, phi);
        for (const auto& pp : factorize(p - 1)) candidates.push_back(pp.prime);
        if (a > 1) candidates.push_back(p);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    u64 m = lambda;
    for (u64 q : candidates) {
        while (m % q == 0 && pow_mod(2, m / q, d) == 1) m /= q;
    }
    return m;
}

int mobius(u64 d) {
    if (d == 0) throw DomainError("mobius: d must be positive");
    int mu = 1;
    for (const auto& pp : factorize(d)) {
        if (pp.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

u64 largest_prime_factor(u64 d) {
    if (d == 0) throw DomainError("largest_prime_factor: d must be positive");
    const auto fac = factorize(d);
    return fac.empty() ? 1 : fac.back().prime;
}

OrderRecord order_record(u64 d) {
    return {d, mult_order2(d), largest_prime_factor(d), mobius(d)};
}

u128 int_root(u128 n, unsigned q) {
    if (q == 0) throw DomainError("int_root: q must be positive");
    if (q == 1 || n < 2) return n;
    const unsigned bits = bit_length(n);
    if (q >= bits) return 1;

    // Start above the root; Newton from above decreases monotonically.
    u128 x = u128{1} << ((bits + q - 1) / q);
    while (true) {
        u128 xq1 = 1;
        bool overflow = false;
        for (unsigned i = 0; i + 1 < q; ++i) {
            if (xq1 > n / x) {
                overflow = true;
                break;
            }
            xq1 *= x;
        }
        const u128 quotient = overflow ? 0 : n / xq1;
        const u128 next = ((q - 1) * x + quotient) / q;
        if (next >= x) break;
        x = next;
    }
    while (!pow_le(x, q, n)) --x;
    while (pow_le(x + 1, q, n)) ++x;
    return x;
}

BigInt int_root(const BigInt& n, unsigned q) {
    if (q == 0) throw DomainError("int_root: q must be positive");
    if (n < 0) throw DomainError("int_root: n must be nonnegative");
    if (q == 1 || n < 2) return n;
    const auto bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    if (q >= bits) return 1;

    BigInt x = BigInt(1) << ((bits + q - 1) / q);
    while (true) {
        const BigInt next = ((q - 1) * x + n / boost::multiprecision::pow(x, q - 1)) / q;
        if (next >= x) break;
        x = next;
    }
    while (boost::multiprecision::pow(x, q) > n) --x;
    while (boost::multiprecision::pow(BigInt(x + 1), q) <= n) ++x;
    return x;
}

}  // namespace romanoff

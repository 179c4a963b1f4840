// sieve.hpp
// Segmented sieve of Eratosthenes over odd numbers and the prime-pair
// statistics used in the second-moment bound.
//
// Encoding (both PrimeTable and PrimeSegment):
//   one bit per odd number; 2 is handled separately.
//   PrimeTable:   bit i  <->  odd n = 2*i + 1
//   PrimeSegment: bit i  <->  odd n = first_odd + 2*i

#pragma once

#include "romanoff/types.hpp"

#include <bit>
#include <span>
#include <vector>

namespace romanoff {

inline constexpr u64 kDefaultSegmentSize = u64{1} << 20;

// Odd primes <= limit, by a plain (monolithic) sieve. Used for base primes.
std::vector<u64> small_odd_primes(u64 limit);

// Primality of [lo, hi] from one segmented pass.
class PrimeSegment {
public:
    PrimeSegment(u64 lo, u64 hi);

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }
    bool is_prime(u64 n) const;
    u64 count() const;
    std::vector<u64> primes() const;

private:
    u64 lo_;
    u64 hi_;
    u64 first_odd_;
    u64 nbits_;
    std::vector<u64> words_;
};

PrimeSegment sieve_range(u64 lo, u64 hi);

// Primality bitmap for every n in [0, limit].
class PrimeTable {
public:
    PrimeTable() = default;

    // Filled segment by segment; `threads` workers share the segments.
    explicit PrimeTable(u64 limit, u64 segment_size = kDefaultSegmentSize, unsigned threads = 1);

    // Reference construction: one classic Eratosthenes pass over the whole
    // range, no segmentation.
    static PrimeTable monolithic(u64 limit);

    u64 limit() const { return limit_; }

    bool is_prime(u64 n) const {
        if (n == 2) return limit_ >= 2;
        if ((n & 1) == 0 || n > limit_) return false;
        const u64 i = n >> 1;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    // pi(limit).
    u64 count() const;

    // Calls f(p) for every prime p in [lo, hi], ascending.
    template <class F>
    void for_each_prime(u64 lo, u64 hi, F&& f) const {
        if (hi > limit_) hi = limit_;
        if (lo > hi) return;
        if (lo <= 2 && hi >= 2) f(u64{2});
        if (hi < 3) return;
        const u64 first = (lo < 3 ? 3 : lo) >> 1;  // index of the first odd >= max(lo, 3)
        const u64 last = (hi - 1) >> 1;            // index of the last odd <= hi
        if (first > last) return;
        u64 w = first >> 6;
        const u64 wlast = last >> 6;
        u64 bits = words_[w] & (~u64{0} << (first & 63));
        while (true) {
            if (w == wlast) {
                const unsigned top = static_cast<unsigned>(last & 63);
                if (top < 63) bits &= (u64{2} << top) - 1;
            }
            while (bits) {
                const u64 i = (w << 6) + static_cast<u64>(std::countr_zero(bits));
                f(2 * i + 1);
                bits &= bits - 1;
            }
            if (w == wlast) break;
            bits = words_[++w];
        }
    }

    std::span<const u64> words() const { return words_; }

    friend bool operator==(const PrimeTable&, const PrimeTable&) = default;

private:
    u64 limit_ = 0;
    std::vector<u64> words_;
};

// pi(x), summing sieve segments.
u64 prime_count(u64 x, u64 segment_size = kDefaultSegmentSize);

// #{(p, q) : q - p = |h|, p and q prime, q <= x}. Throws DomainError for h == 0.
// Even h is counted with a shifted-bitmap AND over one sieve pass; odd h can
// only produce the pair (2, 2 + |h|).
u64 prime_pairs_count(u64 x, i64 h);

// prod over distinct primes p | h of (1 + 1/p), exact. Throws for h == 0.
Rational singular_product(i64 h);

// sum over primes 2 < p < z of 1/p.
double prime_recip_sum(double z);

// prod over primes 2 < p < z of (1 + 1/p).
double odd_prime_product(double z);

}  // namespace romanoff

// sieve.cpp

#include "romanoff/sieve.hpp"

#include "romanoff/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace romanoff {

namespace {

u64 isqrt(u64 n) { return static_cast<u64>(int_root(static_cast<u128>(n), 2)); }

// Sieves the odd numbers first_odd, first_odd + 2, ... (nbits of them) into
// `words`, bit 0 <-> first_odd. `base` holds every odd prime <= sqrt(last).
void sieve_odd_block(u64 first_odd, u64 nbits, std::span<const u64> base, u64* words) {
    const u64 nwords = (nbits + 63) / 64;
    std::fill(words, words + nwords, ~u64{0});
    if (nbits % 64) words[nwords - 1] = (u64{1} << (nbits % 64)) - 1;
    if (nbits == 0) return;

    const u64 last = first_odd + 2 * (nbits - 1);
    if (first_odd == 1) words[0] &= ~u64{1};
    for (u64 p : base) {
        if (p > last / p) break;
        u64 start = p * p;
        if (start < first_odd) {
            start = (first_odd + p - 1) / p * p;
            if ((start & 1) == 0) start += p;
        }
        for (u64 n = start; n <= last; n += 2 * p) {
            const u64 i = (n - first_odd) >> 1;
            words[i >> 6] &= ~(u64{1} << (i & 63));
        }
    }
}

// 64 bits of `words` starting at bit offset `bit` (zero-filled past the end).
u64 bits_at(std::span<const u64> words, u64 bit) {
    const u64 w = bit >> 6;
    const unsigned shift = static_cast<unsigned>(bit & 63);
    if (w >= words.size()) return 0;
    u64 v = words[w] >> shift;
    if (shift != 0 && w + 1 < words.size()) v |= words[w + 1] << (64 - shift);
    return v;
}

}  // namespace

std::vector<u64> small_odd_primes(u64 limit) {
    std::vector<u64> primes;
    if (limit < 3) return primes;
    std::vector<bool> composite(limit / 2 + 1, false);  // index i <-> 2i+1
    for (u64 i = 1; 2 * i + 1 <= limit; ++i) {
        if (composite[i]) continue;
        const u64 p = 2 * i + 1;
        primes.push_back(p);
        if (p > limit / p) continue;
        for (u64 n = p * p; n <= limit; n += 2 * p) composite[n / 2] = true;
    }
    return primes;
}

// -------------------------------------------------------
// PrimeSegment
// -------------------------------------------------------

PrimeSegment::PrimeSegment(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw DomainError("sieve_range: lo > hi");
    if (hi > kMaxBound) throw DomainError("sieve_range: hi exceeds 2^62");
    first_odd_ = lo | 1;
    if (first_odd_ < 1) first_odd_ = 1;
    nbits_ = first_odd_ > hi ? 0 : (hi - first_odd_) / 2 + 1;
    words_.assign((nbits_ + 63) / 64, 0);
    const auto base = small_odd_primes(isqrt(hi));
    if (nbits_) sieve_odd_block(first_odd_, nbits_, base, words_.data());
}

bool PrimeSegment::is_prime(u64 n) const {
    if (n < lo_ || n > hi_) return false;
    if (n == 2) return true;
    if ((n & 1) == 0) return false;
    const u64 i = (n - first_odd_) >> 1;
    return (words_[i >> 6] >> (i & 63)) & 1;
}

u64 PrimeSegment::count() const {
    u64 c = (lo_ <= 2 && hi_ >= 2) ? 1 : 0;
    for (u64 w : words_) c += static_cast<u64>(std::popcount(w));
    return c;
}

std::vector<u64> PrimeSegment::primes() const {
    std::vector<u64> out;
    if (lo_ <= 2 && hi_ >= 2) out.push_back(2);
    for (u64 w = 0; w < words_.size(); ++w) {
        for (u64 bits = words_[w]; bits; bits &= bits - 1)
            out.push_back(first_odd_ + 2 * ((w << 6) + static_cast<u64>(std::countr_zero(bits))));
    }
    return out;
}

PrimeSegment sieve_range(u64 lo, u64 hi) { return PrimeSegment(lo, hi); }

// -------------------------------------------------------
// PrimeTable
// -------------------------------------------------------

PrimeTable::PrimeTable(u64 limit, u64 segment_size, unsigned threads) : limit_(limit) {
    if (limit > kMaxBound) throw DomainError("PrimeTable: limit exceeds 2^62");
    const u64 nbits = limit / 2 + ((limit & 1) ? 1 : 0);  // odd numbers 1..limit
    words_.assign((nbits + 63) / 64, 0);
    if (nbits == 0) return;

    const auto base = small_odd_primes(isqrt(limit));
    // Segments are whole words so workers never share one.
    const u64 seg_bits = std::max<u64>(64, (segment_size / 2 + 63) / 64 * 64);
    const u64 nseg = (nbits + seg_bits - 1) / seg_bits;
    std::atomic<u64> next{0};
    auto work = [&] {
        for (u64 s = next++; s < nseg; s = next++) {
            const u64 b0 = s * seg_bits;
            const u64 b1 = std::min(nbits, b0 + seg_bits);
            sieve_odd_block(2 * b0 + 1, b1 - b0, base, words_.data() + b0 / 64);
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(nseg)));
    if (threads == 1) {
        work();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
}

PrimeTable PrimeTable::monolithic(u64 limit) {
    PrimeTable t;
    t.limit_ = limit;
    const u64 nbits = limit / 2 + ((limit & 1) ? 1 : 0);
    t.words_.assign((nbits + 63) / 64, 0);
    if (nbits == 0) return t;
    std::vector<bool> composite(nbits, false);
    composite[0] = true;  // 1
    for (u64 i = 1; i < nbits; ++i) {
        if (composite[i]) continue;
        const u64 p = 2 * i + 1;
        if (p > limit / p) continue;
        for (u64 n = p * p; n <= limit; n += 2 * p) composite[n >> 1] = true;
    }
    for (u64 i = 0; i < nbits; ++i)
        if (!composite[i]) t.words_[i >> 6] |= u64{1} << (i & 63);
    return t;
}

u64 PrimeTable::count() const {
    u64 c = limit_ >= 2 ? 1 : 0;
    for (u64 w : words_) c += static_cast<u64>(std::popcount(w));
    return c;
}

// -------------------------------------------------------
// Counting
// -------------------------------------------------------

u64 prime_count(u64 x, u64 segment_size) {
    if (x < 2) return 0;
    if (x > kMaxBound) throw DomainError("prime_count: x exceeds 2^62");
    segment_size = std::max<u64>(segment_size, 128);
    const auto base = small_odd_primes(isqrt(x));
    std::vector<u64> words;
    u64 total = 1;  // the prime 2
    for (u64 lo = 3; lo <= x; lo += segment_size) {
        const u64 hi = std::min(x, lo + segment_size - 1);
        const u64 first_odd = lo | 1;
        if (first_odd > hi) continue;
        const u64 nbits = (hi - first_odd) / 2 + 1;
        words.resize((nbits + 63) / 64);
        sieve_odd_block(first_odd, nbits, base, words.data());
        for (u64 w : words) total += static_cast<u64>(std::popcount(w));
    }
    return total;
}

u64 prime_pairs_count(u64 x, i64 h) {
    if (h == 0) throw DomainError("prime_pairs_count: h must be nonzero");
    const u64 gap = h < 0 ? static_cast<u64>(-(h + 1)) + 1 : static_cast<u64>(h);
    if (x < 2 || gap > x) return 0;
    if (gap & 1) return (2 + gap <= x && is_prime_u64(2 + gap)) ? 1 : 0;

    const PrimeTable table(x);
    const auto words = table.words();
    // Bit i (odd 2i+1) of the shifted view is bit i + gap/2 of the table, so
    // the AND marks p with p and p + gap both prime; zero-fill covers q > x.
    const u64 shift = gap / 2;
    u64 total = 0;
    for (u64 w = 0; w < words.size(); ++w)
        total += static_cast<u64>(std::popcount(words[w] & bits_at(words, w * 64 + shift)));
    return total;
}

Rational singular_product(i64 h) {
    if (h == 0) throw DomainError("singular_product: h must be nonzero");
    const u64 a = h < 0 ? static_cast<u64>(-(h + 1)) + 1 : static_cast<u64>(h);
    Rational product = 1;
    for (const auto& pp : factorize(a)) product *= Rational(pp.prime + 1, pp.prime);
    return product;
}

namespace {

template <class F>
void for_each_odd_prime_below(double z, F&& f) {
    if (!(z > 3)) return;
    const double c = std::ceil(z);
    const u64 top = static_cast<u64>(c) - 1;  // primes p < z means p <= ceil(z) - 1
    for (u64 p : small_odd_primes(top)) f(p);
}

}  // namespace

double prime_recip_sum(double z) {
    long double s = 0;
    for_each_odd_prime_below(z, [&](u64 p) { s += 1.0L / static_cast<long double>(p); });
    return static_cast<double>(s);
}

double odd_prime_product(double z) {
    long double prod = 1;
    for_each_odd_prime_below(z, [&](u64 p) { prod *= 1.0L + 1.0L / static_cast<long double>(p); });
    return static_cast<double>(prod);
}

}  // namespace romanoff

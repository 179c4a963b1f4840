// represent.hpp
// Representation function r(n) = #{(p, a) : p + a = n, p prime, a in E},
// where E is the full exponent-sum set
//
//   E = { 2^floor(k_1^r_1) + ... + 2^floor(k_t^r_t) : k_i >= 1 },
//
// plus density reports, the two moments of r and the Cauchy-Schwarz lower
// bound (sum r)^2 / (x * sum r^2).
//
// The counting pass is blocked over n: each block owns a dense counter array
// for its n-range, so memory is O(threads * block) regardless of x and the
// merge is plain integer addition (output does not depend on thread count).

#pragma once

#include "romanoff/floorpow.hpp"
#include "romanoff/sieve.hpp"

#include <optional>
#include <vector>

namespace romanoff {

struct ExponentSumSet {
    u64 bound = 0;
    std::vector<u64> values;
};

struct DensityOptions {
    unsigned threads = 1;
    u64 segment_size = kDefaultSegmentSize;
};

struct DensityReport {
    u64 x = 0;
    u64 odd_total = 0;          // odd n in (1, x]
    u64 representable = 0;      // odd n <= x with r(n) >= 1
    double density = 0;         // representable / odd_total
    u64 representable_all = 0;  // all n <= x with r(n) >= 1
    double density_all = 0;     // representable_all / x
    u64 sum_r = 0;
    u64 sum_r2 = 0;
    double cs_lower = 0;        // sum_r^2 / (x * sum_r2)
    u64 sumset_size = 0;        // |E(x)|
};

// Odd-only bitmap: bit i <-> n = 2i + 1.
class RepresentableBitmap {
public:
    RepresentableBitmap() = default;
    explicit RepresentableBitmap(u64 x) : x_(x), words_((x / 2 + 1 + 63) / 64, 0) {}

    u64 bound() const { return x_; }
    bool contains(u64 n) const {
        if ((n & 1) == 0 || n > x_) return false;
        const u64 i = n >> 1;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(u64 n) {
        const u64 i = n >> 1;
        words_[i >> 6] |= u64{1} << (i & 63);
    }
    u64 count() const;

    friend bool operator==(const RepresentableBitmap&, const RepresentableBitmap&) = default;

private:
    u64 x_ = 0;
    std::vector<u64> words_;
};

struct Witness {
    u64 n = 0;
    u64 p = 0;
    u64 a = 0;
    std::vector<u64> exponents;  // floor(k_i^r_i)
    std::vector<BigInt> ks;      // least k_i giving that exponent
};

// Full t-fold exponent-sum set up to x (x <= 2^62).
ExponentSumSet exponent_sums(const ExponentSpec& spec, u64 x);

RepresentableBitmap mark_representable(const ExponentSumSet& sums, u64 x,
                                       const DensityOptions& options = {});

DensityReport density_report(const ExponentSpec& spec, u64 x, const DensityOptions& options = {});

// Throws DomainError unless x_grid is strictly increasing.
std::vector<DensityReport> dichotomy_experiment(const ExponentSpec& spec,
                                                const std::vector<u64>& x_grid,
                                                const DensityOptions& options = {});

// pi(x) * |E(x)| / x, the counting bound behind the density-zero direction.
double upper_bound_density(const ExponentSpec& spec, u64 x);

// First representation n = p + a found in lexicographic exponent order, or
// nullopt. Powers use k >= 1, so 2^0 never appears.
std::optional<Witness> find_witness(u64 n, const ExponentSpec& spec);

}  // namespace romanoff

// sawtooth.hpp
// psi(t) = {t} - 1/2, sums of psi(Y k^alpha + theta) over k-ranges, the
// exponent-pair family (1/(4Q-2), 1 - (q+1)/(4Q-2)) with Q = 2^q, and the
// van der Corput type bound
//
//   sum_{K <= k < 2K} psi(Y k^alpha + theta)
//       << K^(1-alpha) / Y + Y^(kappa/(1+kappa)) K^((lambda + kappa alpha)/(1+kappa)).
//
// Sums use the exact integer part of k^alpha (from floor_pow) and a rational
// Y = a/b, so the fractional part of each argument is formed from small
// numbers and terms next to a discontinuity of psi land on the right side.

#pragma once

#include "romanoff/floorpow.hpp"

#include <vector>

namespace romanoff {

// Positive rationals other than exponents (Y in the psi sums) share the
// same representation.
using PositiveRational = RationalExp;

struct ExponentPair {
    Rational kappa;
    Rational lambda_;

    // 0 <= kappa <= 1/2 <= lambda_ <= 1
    bool in_box() const;
    std::string str() const;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

struct PsiSumQuery {
    double K = 3;
    PositiveRational Y;
    double theta = 0;
    RationalExp alpha;
};

struct PsiSplit {
    u64 split_k = 0;  // floor(m^(1/r)); S1 covers k <= split_k
    double s1 = 0;
    double s2 = 0;
    double total = 0;
    u64 s1_terms = 0;
};

struct PairCondition {
    Rational value;  // r1 * kappa + lambda_
    bool satisfied = false;
};

struct ScanRow {
    RationalExp alpha;
    PositiveRational Y;
    double theta = 0;
    double K = 0;
    double sum = 0;
    double bound = 0;
    double ratio = 0;
};

// Value in [-1/2, 1/2).
double psi(double t);

// sum_{k = k_lo}^{k_hi} psi(Y k^alpha + theta); zero for an empty range.
double psi_sum(PositiveRational Y, RationalExp alpha, double theta, u64 k_lo, u64 k_hi);

// Throws DomainError when K < 3 or alpha is an integer.
double psi_sum_dyadic(const PsiSumQuery& q);

// sum over k_lo <= k <= k_hi of psi(k^r / m + theta), split at k = floor(m^(1/r)).
PsiSplit psi_sum_range(RationalExp r, u64 m, double theta, u64 k_lo, u64 k_hi);

// Throws DomainError for q outside [1, 60].
ExponentPair pair_family(unsigned q);

// floor(r1) + 1, the member of the family that makes r1 kappa + lambda < 1.
unsigned default_pair_q(RationalExp r1);

PairCondition pair_condition(RationalExp r1, const ExponentPair& pair);

double lemma1_bound(const PsiSumQuery& q, const ExponentPair& pair);

// One row per (alpha, Y, theta, K), in that nesting order.
std::vector<ScanRow> lemma1_ratio_scan(const std::vector<RationalExp>& alphas,
                                       const std::vector<PositiveRational>& ys,
                                       const std::vector<double>& thetas,
                                       const std::vector<double>& ks, const ExponentPair& pair);

struct ScanGrid {
    std::vector<RationalExp> alphas;
    std::vector<PositiveRational> ys;
    std::vector<double> thetas;
    std::vector<double> ks;
};

// alpha in {3/2, 5/2}, Y in {1/3, 1/7, 1/31}, theta in {0, 0.37},
// K in {2^8, ..., 2^14}.
ScanGrid default_scan_grid();

}  // namespace romanoff

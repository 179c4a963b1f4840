// congruence.hpp
// Solution counts for 2^floor(k^r) = g (mod d), the reduction to
// floor(k^r) = l (mod e2(d)), the gap argument bounding e2(d) by
// (k' + L)^r - k'^r + 1, the weighted d-sums W1/W2/W3 and partial sums of
// the series sum_{odd d} 1 / (d * e2(d)^eps).

#pragma once

#include "romanoff/floorpow.hpp"
#include "romanoff/sawtooth.hpp"

#include <optional>
#include <vector>

namespace romanoff {

struct CongruenceQuery {
    u64 d = 1;  // odd
    u64 g = 0;  // residue mod d
    RationalExp r;
    u64 k_max = 1;
};

// Residue class floor(k^r) = ell (mod modulus), modulus = e2(d).
struct ReducedResidue {
    u64 ell = 0;
    u64 modulus = 1;

    friend bool operator==(const ReducedResidue&, const ReducedResidue&) = default;
};

struct ClusterGap {
    u64 e2 = 1;
    u64 count = 0;              // solutions k <= k_max
    bool has_gap = false;       // two consecutive solutions beyond sqrt(k_max)
    u64 k_prime = 0;            // first solution of the minimal-gap pair
    u64 min_gap = 0;            // L
    double implied_bound = 0;   // (k' + L)^r - k'^r + 1
    bool bound_holds = false;   // e2 <= implied_bound, decided exactly
    bool gap_within_loglog = false;  // L <= 2 log log(k_max^r)
};

// Per-class counts #{k <= k_max : floor(k^r) = ell (mod e2(d))} for every ell,
// and the largest of them (the worst residue g for this d).
struct ResidueCounts {
    u64 e2 = 1;
    std::vector<u64> counts;
    u64 max_count = 0;
    u64 argmax_ell = 0;  // least ell attaining max_count
};

struct WeightedSums {
    double X = 0;
    RationalExp r1;
    ExponentPair pair;
    double w1 = 0;
    double w2 = 0;
    double w3 = 0;
    double order_cutoff = 0;  // (log X)^(1 - 1/r1) * log log X
    std::vector<u64> admissible_d;
};

struct DyadicBlock {
    u64 lo = 0;  // odd d in (lo, hi]; the first block is [1, 1]
    u64 hi = 0;
    double increment = 0;
    bool complete = true;
};

struct EtPartialSum {
    u64 n = 0;
    double eps = 0;
    double partial = 0;
    std::vector<DyadicBlock> blocks;
};

// Direct loop over k <= k_max; the test oracle for the reduced count.
u64 count_solutions_bruteforce(const CongruenceQuery& q);

// Discrete log of g to base 2 mod odd d (baby-step giant-step, plain scan
// when e2(d) < 64). nullopt when g is not a power of 2 mod d, which includes
// every g sharing a factor with d.
std::optional<ReducedResidue> reduce_congruence(u64 d, u64 g);

// #{k <= k_max : floor(k^r) = ell (mod e2(d))}. Throws unless ell < e2(d).
u64 count_solutions_reduced(u64 d, u64 ell, RationalExp r, u64 k_max);

ResidueCounts residue_counts(u64 d, RationalExp r, u64 k_max);

ClusterGap cluster_gap_analysis(u64 d, u64 ell, RationalExp r, u64 k_max);

// Squarefree odd d with every prime factor < log X, d <= X (d = 1 included).
std::vector<u64> smooth_squarefree_odd(double X);

// Requires r1 > 1 and X > 1; d = 1 always contributes.
WeightedSums weighted_sums(double X, RationalExp r1, const ExponentPair& pair);

// sum over odd d <= n of 1 / (d * e2(d)^eps), with dyadic block increments.
EtPartialSum et_partial_sum(u64 n, double eps);

// Same series for integer eps, in exact rational arithmetic.
Rational et_partial_sum_exact(u64 n, unsigned eps);

}  // namespace romanoff

// congruence.cpp

#include "romanoff/congruence.hpp"

#include "romanoff/arith.hpp"
#include "romanoff/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace romanoff {

namespace {

void require_odd(u64 d, const char* who) {
    if (d == 0 || d % 2 == 0) throw DomainError(std::string(who) + ": d must be odd and positive");
}

void smooth_products(const std::vector<u64>& primes, std::size_t from, u64 d, double X,
                     std::vector<u64>& out) {
    out.push_back(d);
    for (std::size_t i = from; i < primes.size(); ++i) {
        const u64 p = primes[i];
        if (static_cast<double>(d) * static_cast<double>(p) > X) break;
        smooth_products(primes, i + 1, d * p, X, out);
    }
}

}  // namespace

u64 count_solutions_bruteforce(const CongruenceQuery& q) {
    require_odd(q.d, "count_solutions_bruteforce");
    if (q.g >= q.d) throw DomainError("count_solutions_bruteforce: g must be reduced mod d");
    u64 count = 0;
    for (u64 k = 1; k <= q.k_max; ++k)
        if (pow_mod(2, floor_pow(k, q.r), q.d) == q.g) ++count;
    return count;
}

std::optional<ReducedResidue> reduce_congruence(u64 d, u64 g) {
    require_odd(d, "reduce_congruence");
    if (g >= d) throw DomainError("reduce_congruence: g must be reduced mod d");
    if (d == 1) return ReducedResidue{0, 1};
    if (std::gcd(g, d) != 1) return std::nullopt;

    const u64 m = mult_order2(d);
    if (m < 64) {
        u64 v = 1;
        for (u64 j = 0; j < m; ++j) {
            if (v == g) return ReducedResidue{j, m};
            v = mul_mod(v, 2, d);
        }
        return std::nullopt;
    }

    // Baby steps 2^j (j < s) are distinct since s <= m; giant steps multiply
    // by 2^(-s) = 2^(m - s).
    const u64 s = static_cast<u64>(int_root(static_cast<u128>(m - 1), 2)) + 1;
    std::unordered_map<u64, u64> baby;
    baby.reserve(s * 2);
    u64 v = 1;
    for (u64 j = 0; j < s; ++j) {
        baby.emplace(v, j);
        v = mul_mod(v, 2, d);
    }
    const u64 giant = pow_mod(2, m - s, d);
    u64 gamma = g;
    for (u64 i = 0; i <= s; ++i) {
        if (const auto it = baby.find(gamma); it != baby.end()) {
            const u64 ell = i * s + it->second;
            if (ell < m) return ReducedResidue{ell, m};
        }
        gamma = mul_mod(gamma, giant, d);
    }
    return std::nullopt;
}

u64 count_solutions_reduced(u64 d, u64 ell, RationalExp r, u64 k_max) {
    require_odd(d, "count_solutions_reduced");
    const u64 m = mult_order2(d);
    if (ell >= m) throw DomainError("count_solutions_reduced: ell must be below e2(d)");
    u64 count = 0;
    for (u64 k = 1; k <= k_max; ++k)
        if (floor_pow(k, r) % m == ell) ++count;
    return count;
}

ResidueCounts residue_counts(u64 d, RationalExp r, u64 k_max) {
    require_odd(d, "residue_counts");
    ResidueCounts out;
    out.e2 = mult_order2(d);
    if (out.e2 > (u64{1} << 26)) throw DomainError("residue_counts: e2(d) too large to tabulate");
    out.counts.assign(out.e2, 0);
    for (u64 k = 1; k <= k_max; ++k) ++out.counts[floor_pow(k, r) % out.e2];
    const auto it = std::max_element(out.counts.begin(), out.counts.end());
    out.max_count = *it;
    out.argmax_ell = static_cast<u64>(it - out.counts.begin());
    return out;
}

ClusterGap cluster_gap_analysis(u64 d, u64 ell, RationalExp r, u64 k_max) {
    require_odd(d, "cluster_gap_analysis");
    ClusterGap out;
    out.e2 = mult_order2(d);
    if (ell >= out.e2) throw DomainError("cluster_gap_analysis: ell must be below e2(d)");

    // Consecutive solutions (prev, k); the pair qualifies when prev > sqrt(k_max).
    u64 prev = 0;
    u64 prev_floor = 0;
    u64 best_floor_a = 0, best_floor_b = 0;
    for (u64 k = 1; k <= k_max; ++k) {
        const u64 f = floor_pow(k, r);
        if (f % out.e2 != ell) continue;
        ++out.count;
        if (prev != 0 && static_cast<u128>(prev) * prev > k_max) {
            const u64 gap = k - prev;
            if (!out.has_gap || gap < out.min_gap) {
                out.has_gap = true;
                out.min_gap = gap;
                out.k_prime = prev;
                best_floor_a = prev_floor;
                best_floor_b = f;
            }
        }
        prev = k;
        prev_floor = f;
    }
    if (!out.has_gap) return out;

    const long double rr = static_cast<long double>(r.num()) / static_cast<long double>(r.den());
    out.implied_bound = static_cast<double>(
        std::pow(static_cast<long double>(out.k_prime + out.min_gap), rr) -
        std::pow(static_cast<long double>(out.k_prime), rr) + 1);
    // Both floors lie in the same class mod e2, so their difference is 0 or
    // at least e2. (k'+L)^r - k'^r + 1 exceeds the floor difference, and when
    // the floors coincide it lies in [1, 2).
    out.bound_holds = (best_floor_b - best_floor_a >= out.e2) || out.e2 == 1;
    const long double loglog = std::log(rr * std::log(static_cast<long double>(k_max)));
    out.gap_within_loglog = loglog > 0 && static_cast<long double>(out.min_gap) <= 2 * loglog;
    return out;
}

std::vector<u64> smooth_squarefree_odd(double X) {
    std::vector<u64> out;
    if (!(X >= 1)) return out;
    const double z = std::log(X);
    std::vector<u64> primes;
    if (z > 3) {
        const u64 top = static_cast<u64>(std::ceil(z)) - 1;
        for (u64 p : small_odd_primes(top))
            if (static_cast<double>(p) < z) primes.push_back(p);
    }
    smooth_products(primes, 0, 1, X, out);
    std::sort(out.begin(), out.end());
    return out;
}

WeightedSums weighted_sums(double X, RationalExp r1, const ExponentPair& pair) {
    if (!(X >= std::exp(std::exp(1.0)) * (1 - 1e-12)))
        throw DomainError("weighted_sums: X must be at least e^e");
    if (r1.num() <= r1.den()) throw DomainError("weighted_sums: r1 must exceed 1");

    WeightedSums out;
    out.X = X;
    out.r1 = r1;
    out.pair = pair;
    const double logx = std::log(X);
    const double inv_r1 = 1.0 / r1.to_double();
    const double kappa = to_double(pair.kappa);
    const double lambda = to_double(pair.lambda_);
    out.order_cutoff = std::pow(logx, 1 - inv_r1) * std::log(logx);
    const double w2_log_power =
        std::pow(logx, inv_r1 * (r1.to_double() * kappa + lambda) / (1 + kappa));

    for (u64 d : smooth_squarefree_odd(X)) {
        const u64 e2 = mult_order2(d);
        if (d != 1 && static_cast<double>(e2) > out.order_cutoff) continue;
        out.admissible_d.push_back(d);
        const double w = 1.0 / static_cast<double>(d);
        const double e = static_cast<double>(e2);
        out.w1 += w * std::pow(logx, inv_r1) / e;
        out.w2 += w * w2_log_power * std::pow(e, -kappa / (1 + kappa));
        out.w3 += w * std::pow(e, inv_r1);
    }
    return out;
}

EtPartialSum et_partial_sum(u64 n, double eps) {
    if (n == 0) throw DomainError("et_partial_sum: N must be positive");
    if (!(eps > 0)) throw DomainError("et_partial_sum: eps must be positive");
    EtPartialSum out;
    out.n = n;
    out.eps = eps;
    auto term = [&](u64 d) {
        return 1.0L / (static_cast<long double>(d) *
                       std::pow(static_cast<long double>(mult_order2(d)), static_cast<long double>(eps)));
    };

    long double total = term(1);
    out.blocks.push_back({1, 1, static_cast<double>(total), true});
    for (u64 lo = 2; lo < n * 2 && lo <= n; lo *= 2) {
        // Block (lo, 2 lo]; the last one may be cut at n.
        const u64 hi = std::min(2 * lo, n);
        long double inc = 0;
        for (u64 d = lo + 1; d <= hi; d += 2) inc += term(d);
        total += inc;
        out.blocks.push_back({lo, hi, static_cast<double>(inc), hi == 2 * lo});
        if (hi == n) break;
    }
    out.partial = static_cast<double>(total);
    return out;
}

Rational et_partial_sum_exact(u64 n, unsigned eps) {
    if (n == 0) throw DomainError("et_partial_sum_exact: N must be positive");
    Rational total = 0;
    for (u64 d = 1; d <= n; d += 2)
        total += Rational(BigInt(1), BigInt(d) * boost::multiprecision::pow(BigInt(mult_order2(d)), eps));
    return total;
}

}  // namespace romanoff

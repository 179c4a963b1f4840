// sawtooth.cpp

#include "romanoff/sawtooth.hpp"

#include "romanoff/arith.hpp"

#include <cfloat>
#include <cmath>

namespace romanoff {

namespace {

// Fractional part of k^alpha given its exact floor I. Zero exactly when k is a
// perfect den-th power (gcd(num, den) = 1); otherwise kept strictly inside
// (0, 1) so the exact integer part is never contradicted by rounding.
long double frac_of_power(u64 k, RationalExp alpha, u64 floor_value) {
    if (alpha.den() == 1) return 0;
    const u128 c = int_root(static_cast<u128>(k), static_cast<unsigned>(std::min<u64>(alpha.den(), 128)));
    bool perfect = c > 1 || k == 1;
    if (c > 1) {
        u128 acc = 1;
        for (u64 i = 0; i < alpha.den() && perfect; ++i) {
            acc *= c;
            if (acc > k) perfect = false;
        }
        perfect = perfect && acc == k;
    }
    if (perfect) return 0;
    const long double v =
        std::pow(static_cast<long double>(k),
                 static_cast<long double>(alpha.num()) / static_cast<long double>(alpha.den()));
    long double f = v - static_cast<long double>(floor_value);
    if (f <= 0) f = LDBL_EPSILON;
    if (f >= 1) f = 1 - LDBL_EPSILON;
    return f;
}

// psi(a/b * k^alpha + theta) with the integer part of a*I reduced mod b.
double psi_term(u64 a, u64 b, RationalExp alpha, double theta, u64 k) {
    const u64 I = floor_pow(k, alpha);
    const long double f = frac_of_power(k, alpha, I);
    const u64 residue = static_cast<u64>(static_cast<u128>(a) * I % b);
    const long double t = (static_cast<long double>(residue) + static_cast<long double>(a) * f) /
                              static_cast<long double>(b) +
                          static_cast<long double>(theta);
    long double frac = t - std::floor(t);
    if (frac >= 1) frac = 0;
    return static_cast<double>(frac - 0.5L);
}

double psi_sum_ab(u64 a, u64 b, RationalExp alpha, double theta, u64 k_lo, u64 k_hi) {
    long double s = 0;
    for (u64 k = std::max<u64>(k_lo, 1); k <= k_hi; ++k) s += psi_term(a, b, alpha, theta, k);
    return static_cast<double>(s);
}

}  // namespace

bool ExponentPair::in_box() const {
    const Rational half(1, 2);
    return kappa >= 0 && kappa <= half && lambda_ >= half && lambda_ <= 1;
}

std::string ExponentPair::str() const {
    return "(" + romanoff::to_string(kappa) + ", " + romanoff::to_string(lambda_) + ")";
}

double psi(double t) {
    double f = t - std::floor(t);
    if (f >= 1.0) f = 0.0;  // t a tiny negative number
    return f - 0.5;
}

double psi_sum(PositiveRational Y, RationalExp alpha, double theta, u64 k_lo, u64 k_hi) {
    return psi_sum_ab(Y.num(), Y.den(), alpha, theta, k_lo, k_hi);
}

double psi_sum_dyadic(const PsiSumQuery& q) {
    if (!(q.K >= 3)) throw DomainError("psi_sum_dyadic: K must be at least 3");
    if (q.alpha.is_integer()) throw DomainError("psi_sum_dyadic: alpha must not be an integer");
    const u64 lo = static_cast<u64>(std::ceil(q.K));
    const u64 hi = static_cast<u64>(std::ceil(2 * q.K)) - 1;
    return psi_sum(q.Y, q.alpha, q.theta, lo, hi);
}

PsiSplit psi_sum_range(RationalExp r, u64 m, double theta, u64 k_lo, u64 k_hi) {
    if (m == 0) throw DomainError("psi_sum_range: m must be positive");
    PsiSplit out;
    const BigInt md = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(r.den()));
    const BigInt split = int_root(md, static_cast<unsigned>(r.num()));
    out.split_k = split > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max()
                                                          : split.convert_to<u64>();
    if (k_lo > k_hi) return out;
    const u64 s1_hi = std::min(k_hi, out.split_k);
    if (k_lo <= s1_hi) {
        out.s1 = psi_sum_ab(1, m, r, theta, k_lo, s1_hi);
        out.s1_terms = s1_hi - std::max<u64>(k_lo, 1) + 1;
    }
    if (out.split_k < k_hi) {
        const u64 s2_lo = std::max(k_lo, out.split_k + 1);
        out.s2 = psi_sum_ab(1, m, r, theta, s2_lo, k_hi);
    }
    out.total = out.s1 + out.s2;
    return out;
}

ExponentPair pair_family(unsigned q) {
    if (q < 1 || q > 60) throw DomainError("pair_family: q must lie in [1, 60]");
    const BigInt denom = 4 * (BigInt(1) << q) - 2;
    return {Rational(BigInt(1), denom), Rational(1) - Rational(BigInt(q + 1), denom)};
}

unsigned default_pair_q(RationalExp r1) { return static_cast<unsigned>(r1.num() / r1.den()) + 1; }

PairCondition pair_condition(RationalExp r1, const ExponentPair& pair) {
    PairCondition c;
    c.value = r1.value() * pair.kappa + pair.lambda_;
    c.satisfied = c.value < 1;
    return c;
}

double lemma1_bound(const PsiSumQuery& q, const ExponentPair& pair) {
    const double K = q.K;
    const double Y = q.Y.to_double();
    const double alpha = q.alpha.to_double();
    const double kappa = to_double(pair.kappa);
    const double lambda = to_double(pair.lambda_);
    return std::pow(K, 1 - alpha) / Y +
           std::pow(Y, kappa / (1 + kappa)) * std::pow(K, (lambda + kappa * alpha) / (1 + kappa));
}

std::vector<ScanRow> lemma1_ratio_scan(const std::vector<RationalExp>& alphas,
                                       const std::vector<PositiveRational>& ys,
                                       const std::vector<double>& thetas,
                                       const std::vector<double>& ks, const ExponentPair& pair) {
    std::vector<ScanRow> rows;
    for (const auto& alpha : alphas)
        for (const auto& y : ys)
            for (double theta : thetas)
                for (double K : ks) {
                    const PsiSumQuery q{K, y, theta, alpha};
                    ScanRow row{alpha, y, theta, K, 0, 0, 0};
                    row.sum = psi_sum_dyadic(q);
                    row.bound = lemma1_bound(q, pair);
                    row.ratio = row.bound > 0 ? std::abs(row.sum) / row.bound : 0;
                    rows.push_back(row);
                }
    return rows;
}

ScanGrid default_scan_grid() {
    ScanGrid g;
    g.alphas = {RationalExp::make(3, 2), RationalExp::make(5, 2)};
    g.ys = {RationalExp::make(1, 3), RationalExp::make(1, 7), RationalExp::make(1, 31)};
    g.thetas = {0.0, 0.37};
    for (int j = 8; j <= 14; ++j) g.ks.push_back(std::ldexp(1.0, j));
    return g;
}

}  // namespace romanoff

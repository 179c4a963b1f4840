#include "doctest.h"

#include "romanoff/sawtooth.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

using namespace romanoff;

namespace {

RationalExp R(u64 n, u64 d = 1) { return RationalExp::make(n, d); }

using Float50 = boost::multiprecision::cpp_bin_float_50;

// sum_{k=lo}^{hi} psi(k^(num/den) / b + theta) with 50 significant digits.
double psi_sum_ref(u64 b, RationalExp alpha, double theta, u64 lo, u64 hi) {
    Float50 s = 0;
    const Float50 e = Float50(alpha.num()) / alpha.den();
    for (u64 k = lo; k <= hi; ++k) {
        const Float50 t = boost::multiprecision::pow(Float50(k), e) / b + Float50(theta);
        // pow may land a hair below an exact integer such as 441^(3/2) / 7 = 1323.
        const Float50 near = boost::multiprecision::round(t);
        const Float50 f = boost::multiprecision::abs(t - near) < Float50(1e-40) ? Float50(0)
                                                                                : t - boost::multiprecision::floor(t);
        s += f - Float50(0.5);
    }
    return s.convert_to<double>();
}

}  // namespace

TEST_CASE("psi examples") {
    CHECK(psi(0.75) == 0.25);
    CHECK(psi(2.0) == -0.5);
    CHECK(psi(-0.25) == 0.25);
    CHECK(psi(0) == -0.5);
    CHECK(psi(-1e-300) < 0.5);
    CHECK(psi(-1e-300) >= -0.5);
}

TEST_CASE("psi is 1-periodic on a grid") {
    for (int i = 0; i < 100'000; ++i) {
        const double t = -50.0 + i * 0.001 + 1.0 / 3.0;
        const double a = psi(t), b = psi(t + 1);
        REQUIRE(std::abs(a - b) <= 64 * std::numeric_limits<double>::epsilon());
        REQUIRE(a >= -0.5);
        REQUIRE(a < 0.5);
    }
}

TEST_CASE("psi_sum small cases") {
    // psi(1/2) + psi(1) + psi(3/2) + psi(2) = 0 - 1/2 + 0 - 1/2
    CHECK(psi_sum(R(1, 2), R(1), 0, 1, 4) == -1);
    CHECK(psi_sum(R(1, 2), R(1), 1, 1, 4) == -1);
    CHECK(psi_sum(R(1, 2), R(1), 0, 5, 4) == 0);
    // Integer arguments with m = 1: every term is -1/2.
    const auto m1 = psi_sum_range(R(2), 1, 0, 1, 50);
    CHECK(m1.total == -25);
    // Perfect squares land exactly on integers: k^(3/2) for k = 4, 9 are 8, 27.
    CHECK(psi_sum(R(1), R(3, 2), 0, 4, 4) == -0.5);
    CHECK(psi_sum(R(1), R(3, 2), 0, 9, 9) == -0.5);
    CHECK(psi_sum(R(1, 8), R(3, 2), 0, 4, 4) == -0.5);
    CHECK(psi_sum(R(1, 3), R(3, 2), 0, 9, 9) == -0.5);
}

TEST_CASE("psi_sum_range against an 8-term reference") {
    const auto s = psi_sum_range(R(3, 2), 3, 0, 1, 8);
    CHECK(s.total == doctest::Approx(psi_sum_ref(3, R(3, 2), 0, 1, 8)).epsilon(1e-12));
    // split point floor(3^(2/3)) = 2
    CHECK(s.split_k == 2);
    CHECK(s.s1_terms == 2);
    CHECK(s.total == doctest::Approx(s.s1 + s.s2));
    CHECK(std::abs(s.s1) <= static_cast<double>(s.s1_terms) / 2);
}

TEST_CASE("psi_sum_range split consistency and trivial S1 bound") {
    for (u64 m : {1ull, 3ull, 11ull, 100ull, 4095ull})
        for (RationalExp r : {R(3, 2), R(5, 2), R(7, 3)})
            for (double theta : {0.0, 0.37, -0.9}) {
                const auto s = psi_sum_range(r, m, theta, 1, 3000);
                CHECK(s.total == doctest::Approx(psi_sum(R(1, m), r, theta, 1, 3000)).epsilon(1e-12));
                CHECK(s.total == doctest::Approx(s.s1 + s.s2));
                CHECK(std::abs(s.s1) <= static_cast<double>(s.s1_terms) / 2);
                CHECK(std::abs(s.s1) <= std::pow(static_cast<double>(m), 1 / r.to_double()) / 2 + 1);
                // split_k^r <= m < (split_k + 1)^r
                CHECK(floor_pow(s.split_k, r) <= m);
                CHECK(std::pow(static_cast<double>(s.split_k + 1), r.to_double()) > static_cast<double>(m));
            }
}

TEST_CASE("psi_sum_dyadic agrees with a 50-digit reference") {
    const PsiSumQuery q{256, R(1, 7), 0, R(3, 2)};
    const double ref = psi_sum_ref(7, R(3, 2), 0, 256, 511);
    CHECK(psi_sum_dyadic(q) == doctest::Approx(ref).epsilon(1e-12));

    for (RationalExp alpha : {R(3, 2), R(5, 2)})
        for (u64 b : {3ull, 31ull})
            for (double theta : {0.0, 0.37}) {
                const PsiSumQuery qq{1024, R(1, b), theta, alpha};
                CHECK(psi_sum_dyadic(qq) ==
                      doctest::Approx(psi_sum_ref(b, alpha, theta, 1024, 2047)).epsilon(1e-10));
            }
}

TEST_CASE("psi_sum_dyadic domain and shape") {
    CHECK_THROWS_AS(psi_sum_dyadic({2, R(1, 7), 0, R(3, 2)}), DomainError);
    CHECK_THROWS_AS(psi_sum_dyadic({10, R(1, 7), 0, R(2)}), DomainError);
    // Non-integer K: k runs over [ceil K, ceil 2K - 1].
    CHECK(psi_sum_dyadic({3.5, R(1, 7), 0, R(3, 2)}) == doctest::Approx(psi_sum(R(1, 7), R(3, 2), 0, 4, 6)));
    for (double K : {3.0, 10.0, 100.0, 1000.0, 4096.0}) {
        const double s = psi_sum_dyadic({K, R(1, 31), 0.37, R(5, 2)});
        CHECK(std::abs(s) <= K / 2 + 1);
    }
    // Shifting theta by one changes nothing.
    CHECK(psi_sum_dyadic({300, R(2, 7), 0.25, R(3, 2)}) ==
          doctest::Approx(psi_sum_dyadic({300, R(2, 7), 1.25, R(3, 2)})).epsilon(1e-12));
}

TEST_CASE("pair_family") {
    CHECK(pair_family(1) == ExponentPair{Rational(1, 6), Rational(2, 3)});
    CHECK(pair_family(2) == ExponentPair{Rational(1, 14), Rational(11, 14)});
    CHECK(pair_family(3) == ExponentPair{Rational(1, 30), Rational(13, 15)});
    for (unsigned q = 1; q <= 10; ++q) CHECK(pair_family(q).in_box());
    CHECK_THROWS_AS(pair_family(0), DomainError);
    CHECK_THROWS_AS(pair_family(61), DomainError);
    CHECK(pair_family(1).str() == "(1/6, 2/3)");
}

TEST_CASE("pair_condition") {
    const auto a = pair_condition(R(3, 2), pair_family(2));
    CHECK(a.value == Rational(25, 28));
    CHECK(a.satisfied);
    CHECK(pair_condition(R(5), pair_family(6)).satisfied);
    const auto c = pair_condition(R(100), pair_family(1));
    CHECK(c.value == Rational(100, 6) + Rational(2, 3));
    CHECK_FALSE(c.satisfied);

    CHECK(default_pair_q(R(3, 2)) == 2);
    CHECK(default_pair_q(R(2)) == 3);
    CHECK(default_pair_q(R(99, 10)) == 10);
    // Dense rational grid in (1, 10).
    for (u64 den = 1; den <= 40; ++den)
        for (u64 num = den + 1; num < 10 * den; ++num) {
            const RationalExp r1 = R(num, den);
            REQUIRE(pair_condition(r1, pair_family(default_pair_q(r1))).satisfied);
        }
}

TEST_CASE("lemma1_bound") {
    const PsiSumQuery q{256, R(1, 7), 0, R(3, 2)};
    const double want = 7.0 / 16 + std::pow(1.0 / 7, 1.0 / 7) * std::pow(256.0, (2.0 / 3 + 0.25) / (7.0 / 6));
    CHECK(lemma1_bound(q, pair_family(1)) == doctest::Approx(want).epsilon(1e-14));
    // First term fades as alpha grows.
    const PsiSumQuery big{256, R(1, 7), 0, R(41, 2)};
    const double second = std::pow(1.0 / 7, 1.0 / 7) * std::pow(256.0, (2.0 / 3 + 41.0 / 12) / (7.0 / 6));
    CHECK(lemma1_bound(big, pair_family(1)) == doctest::Approx(second).epsilon(1e-12));
    // Y = 1: at least the second term.
    const PsiSumQuery y1{500, R(1), 0, R(3, 2)};
    CHECK(lemma1_bound(y1, pair_family(1)) >= std::pow(500.0, (2.0 / 3 + 0.25) / (7.0 / 6)));
}

TEST_CASE("lemma1_ratio_scan") {
    const auto g = default_scan_grid();
    CHECK(g.alphas.size() == 2);
    CHECK(g.ys.size() == 3);
    CHECK(g.thetas.size() == 2);
    CHECK(g.ks.front() == 256);
    CHECK(g.ks.back() == 16384);

    const std::vector<double> ks{256, 512, 1024};
    const auto rows = lemma1_ratio_scan(g.alphas, g.ys, g.thetas, ks, pair_family(1));
    REQUIRE(rows.size() == 2 * 3 * 2 * 3);
    // Nesting: alpha, Y, theta, K.
    CHECK(rows[0].alpha == R(3, 2));
    CHECK(rows[1].K == 512);
    CHECK(rows[3].theta == 0.37);
    CHECK(rows[6].Y == R(1, 7));
    CHECK(rows[18].alpha == R(5, 2));
    for (const auto& row : rows) {
        CHECK(row.ratio == doctest::Approx(std::abs(row.sum) / row.bound));
        CHECK(row.sum == psi_sum_dyadic({row.K, row.Y, row.theta, row.alpha}));
    }
    const auto again = lemma1_ratio_scan(g.alphas, g.ys, g.thetas, ks, pair_family(1));
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].sum == again[i].sum);
    CHECK(lemma1_ratio_scan(g.alphas, g.ys, g.thetas, {}, pair_family(1)).empty());
}

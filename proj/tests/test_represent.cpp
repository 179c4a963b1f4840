#include "doctest.h"
#include "oracles.hpp"

#include "romanoff/represent.hpp"

#include <set>

using namespace romanoff;

namespace {

ExponentSpec spec_of(const char* csv) { return ExponentSpec::parse(csv); }

// Naive r(n) table over n <= x from the library's sum set.
std::vector<u64> oracle_r(const std::vector<u64>& sums, u64 x) {
    std::vector<u64> r(x + 1, 0);
    for (u64 n = 0; n <= x; ++n) r[n] = oracle::r_of(n, sums);
    return r;
}

// Full t-fold sums built by nested loops over k, independent of the pruned enumerator.
std::set<u64> oracle_sums2(RationalExp r1, RationalExp r2, u64 x) {
    std::set<u64> out;
    for (u64 k1 = 1; k1 <= 64; ++k1)
        for (u64 k2 = 1; k2 <= 64; ++k2) {
            const u64 e1 = floor_pow(k1, r1), e2 = floor_pow(k2, r2);
            if (e1 > 62 || e2 > 62) continue;
            const u64 v = (u64{1} << e1) + (u64{1} << e2);
            if (v <= x) out.insert(v);
        }
    return out;
}

}  // namespace

TEST_CASE("exponent_sums") {
    CHECK(exponent_sums(spec_of("1"), 100).values == std::vector<u64>{2, 4, 8, 16, 32, 64});
    CHECK(exponent_sums(spec_of("1"), 1).values.empty());

    const auto s22 = exponent_sums(spec_of("2,2"), u64{1} << 20);
    CHECK(s22.values == std::vector<u64>{4, 18, 32, 514, 528, 1024, 65538, 65552, 66048, 131072});

    const auto want33 = oracle_sums2(RationalExp::make(3, 1), RationalExp::make(3, 1), 1000);
    CHECK(exponent_sums(spec_of("3,3"), 1000).values == std::vector<u64>(want33.begin(), want33.end()));

    for (u64 x : {u64{1000}, u64{123'457}, u64{1} << 40}) {
        const auto want = oracle_sums2(RationalExp::make(3, 2), RationalExp::make(5, 2), x);
        CHECK(exponent_sums(spec_of("3/2,5/2"), x).values == std::vector<u64>(want.begin(), want.end()));
    }
    CHECK_THROWS_AS(exponent_sums(spec_of("1"), (u64{1} << 62) + 1), DomainError);
}

TEST_CASE("exponent_sums cardinality bound") {
    for (const char* s : {"1", "2,2", "3/2,5/2", "3,3", "2,2,2"})
        for (u64 x : {u64{100}, u64{10'000}, u64{1'000'000}, u64{1} << 40}) {
            const auto spec = spec_of(s);
            double bound = 1;
            for (const auto& r : spec.rs)
                bound *= 1 + std::pow(std::log2(2.0 * static_cast<double>(x)), 1 / r.to_double());
            CHECK(static_cast<double>(exponent_sums(spec, x).values.size()) <= bound);
        }
}

TEST_CASE("mark_representable examples for powers of two") {
    const u64 x = 1000;
    const auto bm = mark_representable(exponent_sums(spec_of("1"), x), x);
    CHECK(bm.contains(9));
    CHECK_FALSE(bm.contains(959));
    CHECK_FALSE(bm.contains(127));
    CHECK_FALSE(bm.contains(3));
    CHECK_FALSE(bm.contains(1));
    CHECK(bm.contains(5));   // 3 + 2
    CHECK_FALSE(bm.contains(10));  // even n are not tracked
}

TEST_CASE("bitmap matches the naive oracle for x <= 10^4") {
    for (const char* s : {"1", "2,2", "3/2,5/2"}) {
        for (u64 x : {4ull, 5ull, 127ull, 128ull, 129ull, 1000ull, 10'000ull}) {
            const auto sums = exponent_sums(spec_of(s), x);
            const auto r = oracle_r(sums.values, x);
            for (u64 seg : {u64{128}, u64{256}, kDefaultSegmentSize}) {
                const auto bm = mark_representable(sums, x, {1, seg});
                u64 odd_rep = 0;
                for (u64 n = 1; n <= x; n += 2) {
                    REQUIRE(bm.contains(n) == (r[n] >= 1));
                    odd_rep += r[n] >= 1;
                }
                CHECK(bm.count() == odd_rep);
            }
        }
    }
}

TEST_CASE("density_report moments match the oracle") {
    for (const char* s : {"1", "2,2", "3/2,5/2"}) {
        for (u64 x : {4ull, 10ull, 100ull, 1000ull, 10'000ull}) {
            const auto spec = spec_of(s);
            const auto sums = exponent_sums(spec, x);
            const auto r = oracle_r(sums.values, x);
            u64 sum_r = 0, sum_r2 = 0, rep = 0, rep_all = 0;
            for (u64 n = 0; n <= x; ++n) {
                sum_r += r[n];
                sum_r2 += r[n] * r[n];
                rep_all += r[n] >= 1;
                if (n & 1) rep += r[n] >= 1;
            }
            const auto d = density_report(spec, x, {1, 128});
            CHECK(d.x == x);
            CHECK(d.odd_total == (x - 1) / 2);
            CHECK(d.sum_r == sum_r);
            CHECK(d.sum_r2 == sum_r2);
            CHECK(d.representable == rep);
            CHECK(d.representable_all == rep_all);
            CHECK(d.sumset_size == sums.values.size());
            CHECK(d.density >= 0);
            CHECK(d.density <= 1);
            // Cauchy-Schwarz as an exact integer inequality.
            CHECK(static_cast<u128>(d.sum_r) * d.sum_r <= static_cast<u128>(d.representable_all) * d.sum_r2);
            CHECK(d.cs_lower <= static_cast<double>(d.representable_all) / static_cast<double>(x) + 1e-12);
            CHECK(d.sum_r2 >= d.sum_r);
        }
    }
}

TEST_CASE("density_report small examples") {
    // r(9) = 2 from 7 + 2 and 5 + 4.
    CHECK(oracle::r_of(9, exponent_sums(spec_of("1"), 100).values) == 2);
    // x = 10: pairs (p, a) with p + a <= 10.
    const auto d10 = density_report(spec_of("1"), 10);
    u64 pairs = 0;
    for (u64 p = 2; p <= 10; ++p)
        for (u64 a : {2ull, 4ull, 8ull})
            if (oracle::is_prime(p) && p + a <= 10) ++pairs;
    CHECK(d10.sum_r == pairs);
    // x = 4: only n = 3 is odd in (1, 4], and 3 - 2 = 1 is not prime.
    const auto d4 = density_report(spec_of("1"), 4);
    CHECK(d4.odd_total == 1);
    CHECK(d4.representable == 0);
    CHECK_THROWS_AS(density_report(spec_of("1"), 3), DomainError);
}

TEST_CASE("Romanoff density at 10^4 from the oracle") {
    const u64 x = 10'000;
    const auto sums = exponent_sums(spec_of("1"), x);
    u64 rep = 0;
    for (u64 n = 3; n <= x; n += 2) rep += oracle::r_of(n, sums.values) >= 1;
    const auto d = density_report(spec_of("1"), x);
    CHECK(d.representable == rep);
    CHECK(d.representable == 4737);
    CHECK(d.odd_total == 4999);
    // Among odd n the proportion is near 0.95 here; per integer it is about half that.
    CHECK(d.density == doctest::Approx(4737.0 / 4999));
    CHECK(static_cast<double>(d.representable) / x > 0.3);
    CHECK(static_cast<double>(d.representable) / x < 0.7);
}

TEST_CASE("diagonal bound: sum over a of pi(x - a) <= |E| pi(x)") {
    for (const char* s : {"1", "2,2", "3,3"})
        for (u64 x : {1000ull, 100'000ull}) {
            const auto sums = exponent_sums(spec_of(s), x);
            const u64 pix = prime_count(x);
            u64 lhs = 0;
            for (u64 a : sums.values) lhs += prime_count(x - a);
            CHECK(lhs <= sums.values.size() * pix);
            // The left side is exactly sum_r.
            CHECK(lhs == density_report(spec_of(s), x).sum_r);
        }
}

TEST_CASE("representable is nondecreasing in x") {
    for (const char* s : {"1", "2,2", "3,3"}) {
        u64 prev = 0;
        for (u64 x = 4; x <= 3000; x += 37) {
            const u64 rep = density_report(spec_of(s), x, {1, 128}).representable;
            REQUIRE(rep >= prev);
            prev = rep;
        }
    }
}

TEST_CASE("thread count does not change any field") {
    for (const char* s : {"1", "3/2,5/2"}) {
        const auto base = density_report(spec_of(s), 200'000, {1, 4096});
        for (unsigned t : {2u, 3u, 8u}) {
            const auto d = density_report(spec_of(s), 200'000, {t, 4096});
            CHECK(d.representable == base.representable);
            CHECK(d.representable_all == base.representable_all);
            CHECK(d.sum_r == base.sum_r);
            CHECK(d.sum_r2 == base.sum_r2);
            CHECK(d.density == base.density);
            CHECK(d.cs_lower == base.cs_lower);
        }
        CHECK(mark_representable(exponent_sums(spec_of(s), 200'000), 200'000, {4, 4096}) ==
              mark_representable(exponent_sums(spec_of(s), 200'000), 200'000, {1, 4096}));
    }
}

TEST_CASE("dichotomy_experiment") {
    const auto reps = dichotomy_experiment(spec_of("2,2"), {1000, 10'000});
    REQUIRE(reps.size() == 2);
    CHECK(reps[1].x == 10'000);
    CHECK_THROWS_AS(dichotomy_experiment(spec_of("2,2"), {10'000, 1000}), DomainError);
    CHECK_THROWS_AS(dichotomy_experiment(spec_of("2,2"), {1000, 1000}), DomainError);
}

TEST_CASE("upper_bound_density") {
    CHECK(upper_bound_density(spec_of("1"), 100) == doctest::Approx(1.5));
    CHECK(upper_bound_density(spec_of("3,3"), 3) == 0);
    const auto e = exponent_sums(spec_of("3,3"), 1'000'000).values.size();
    CHECK(upper_bound_density(spec_of("3,3"), 1'000'000) ==
          doctest::Approx(78498.0 * static_cast<double>(e) / 1e6));
}

TEST_CASE("find_witness") {
    CHECK_FALSE(find_witness(959, spec_of("1")));
    CHECK_FALSE(find_witness(127, spec_of("1")));
    CHECK_FALSE(find_witness(3, spec_of("1")));
    const auto w = find_witness(9, spec_of("1"));
    REQUIRE(w);
    CHECK(w->p + w->a == 9);
    CHECK(oracle::is_prime(w->p));
    CHECK(w->exponents == std::vector<u64>{1});
    CHECK(w->p == 7);

    // Agreement with the bitmap on every odd n <= 3000.
    for (const char* s : {"1", "2,2", "3/2,5/2"}) {
        const auto bm = mark_representable(exponent_sums(spec_of(s), 3000), 3000);
        for (u64 n = 1; n <= 3000; n += 2) {
            const auto wit = find_witness(n, spec_of(s));
            REQUIRE(static_cast<bool>(wit) == bm.contains(n));
            if (!wit) continue;
            u64 a = 0;
            const auto spec = spec_of(s);
            for (std::size_t i = 0; i < wit->exponents.size(); ++i) {
                CHECK(floor_pow(static_cast<u64>(wit->ks[i]), spec.rs[i]) == wit->exponents[i]);
                a += u64{1} << wit->exponents[i];
            }
            CHECK(a == wit->a);
        }
    }
}

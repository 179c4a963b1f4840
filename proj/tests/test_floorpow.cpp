#include "doctest.h"

#include "romanoff/floorpow.hpp"

#include <set>

using namespace romanoff;

namespace {

RationalExp R(u64 n, u64 d = 1) { return RationalExp::make(n, d); }

ExponentSpec spec_of(std::initializer_list<RationalExp> rs) { return ExponentSpec{rs}; }

}  // namespace

TEST_CASE("RationalExp parsing") {
    CHECK(RationalExp::parse("1.5") == R(3, 2));
    CHECK(RationalExp::parse("3/2") == R(3, 2));
    CHECK(RationalExp::parse("15/10") == R(3, 2));
    CHECK(RationalExp::parse(" 2 ") == R(2));
    CHECK(RationalExp::parse("0.5") == R(1, 2));
    CHECK(RationalExp::parse(".25") == R(1, 4));
    CHECK(RationalExp::parse("2.") == R(2));
    for (const char* bad : {"", "abc", "1/0", "0", "-1", "1.2.3", "3/", "/2", "1e3", "0.0000001"})
        CHECK_THROWS_AS(RationalExp::parse(bad), std::invalid_argument);
    try {
        RationalExp::parse("1.x");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("1.x") != std::string::npos);
    }
    const auto spec = ExponentSpec::parse("1.5,5/2");
    REQUIRE(spec.rs.size() == 2);
    CHECK(spec.inverse_sum() == Rational(2, 3) + Rational(2, 5));
    CHECK(spec.str() == "3/2,5/2");
}

TEST_CASE("floor_pow examples") {
    CHECK(floor_pow(5, R(1)) == 5);
    CHECK(floor_pow(2, R(3, 2)) == 2);
    CHECK(floor_pow(10, R(1, 2)) == 3);
    CHECK(floor_pow(4, R(3, 2)) == 8);
    CHECK(floor_pow(1, R(7, 3)) == 1);
    CHECK_THROWS_AS(floor_pow(0, R(2)), DomainError);
    CHECK_THROWS_AS(floor_pow(1u << 22, R(3)), std::overflow_error);
    // Big-integer path: 3^100 has 159 bits.
    CHECK(floor_pow(3, R(100, 61)) == 6);  // 3^(100/61) = 6.05...
}

TEST_CASE("floor_pow exactness: v^den <= k^num < (v+1)^den") {
    for (RationalExp r : {R(1, 2), R(3, 2), R(2), R(5, 2), R(7, 3)}) {
        for (u64 k = 1; k <= 10'000; ++k) {
            const BigInt v = floor_pow(k, r);
            const BigInt lhs = boost::multiprecision::pow(v, static_cast<unsigned>(r.den()));
            const BigInt mid = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(r.num()));
            const BigInt rhs = boost::multiprecision::pow(BigInt(v + 1), static_cast<unsigned>(r.den()));
            if (!(lhs <= mid && mid < rhs)) FAIL("floor_pow(" << k << ", " << r.str() << ")");
        }
    }
}

TEST_CASE("floor_pow is monotone, strictly for r >= 1") {
    for (RationalExp r : {R(1, 3), R(1, 2), R(1), R(11, 10), R(5, 2)}) {
        u64 prev = floor_pow(1, r);
        for (u64 k = 2; k <= 5000; ++k) {
            const u64 v = floor_pow(k, r);
            REQUIRE(v >= prev);
            if (r.num() >= r.den()) REQUIRE(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("seq_values") {
    CHECK(seq_values(R(1, 2), 3) == std::vector<u64>{1, 2, 3});
    CHECK(seq_values(R(2), 20) == std::vector<u64>{1, 4, 9, 16});
    CHECK(seq_values(R(3, 2), 10) == std::vector<u64>{1, 2, 5, 8});
    CHECK(seq_values(R(2), 0).empty());
    // r <= 1 covers every exponent; compare against a direct scan.
    std::set<u64> seen;
    for (u64 k = 1; k <= 4000; ++k) {
        const u64 v = floor_pow(k, R(2, 3));
        if (v <= 62) seen.insert(v);
    }
    CHECK(std::vector<u64>(seen.begin(), seen.end()) == seq_values(R(2, 3), 62));
}

TEST_CASE("seq_terms carries the least k") {
    const auto terms = seq_terms(R(1, 2), 4);
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].k == 1);  // floor(sqrt(1)) = 1
    CHECK(terms[1].k == 4);
    CHECK(terms[2].k == 9);
    CHECK(terms[3].k == 16);
    const auto t2 = seq_terms(R(3, 2), 10);
    REQUIRE(t2.size() == 4);
    CHECK(t2[2].k == 3);
    CHECK(t2[2].exponent == 5);
}

TEST_CASE("split_lambda") {
    const Split a = split_lambda(spec_of({R(2), R(2)}));
    CHECK(a.kind == SplitKind::Split);
    CHECK(a.s == 2);
    CHECK(a.lambda == R(1));

    const Split b = split_lambda(spec_of({R(3, 2), R(5, 2)}));
    CHECK(b.kind == SplitKind::Split);
    CHECK(b.s == 2);
    CHECK(b.lambda == R(6, 5));

    CHECK(split_lambda(spec_of({R(1, 2), R(7)})).kind == SplitKind::FullRomanoff);
    CHECK(split_lambda(spec_of({R(1)})).kind == SplitKind::FullRomanoff);
    CHECK(split_lambda(spec_of({R(3), R(3)})).kind == SplitKind::Deficient);

    // s is the least index reaching 1; later exponents are ignored.
    const Split c = split_lambda(spec_of({R(3, 2), R(3, 2), R(9)}));
    CHECK(c.kind == SplitKind::Split);
    CHECK(c.s == 2);
    CHECK(c.lambda == R(2));  // 2/3 + 1/((3/2) lambda) = 1
}

TEST_CASE("split identity holds exactly on a grid of tuples") {
    for (u64 a = 11; a <= 40; a += 3)
        for (u64 b = 11; b <= 40; b += 4)
            for (u64 c = 11; c <= 60; c += 7) {
                const ExponentSpec spec = spec_of({R(a, 10), R(b, 10), R(c, 10)});
                const Split sp = split_lambda(spec);
                if (sp.kind != SplitKind::Split) {
                    CHECK((sp.kind == SplitKind::Deficient) == (spec.inverse_sum() < 1));
                    continue;
                }
                Rational partial = 0;
                for (std::size_t i = 0; i + 1 < sp.s; ++i) partial += spec.rs[i].inverse();
                REQUIRE(partial < 1);
                REQUIRE(partial + spec.rs[sp.s - 1].inverse() >= 1);
                REQUIRE(sp.lambda.value() >= 1);
                REQUIRE(partial + Rational(1) / (sp.lambda.value() * spec.rs[sp.s - 1].value()) == 1);
            }
}

TEST_CASE("thinned exponents are a subset of the floor-power sequence") {
    const RationalExp lambda = R(6, 5);
    const RationalExp rs = R(5, 2);
    std::set<u64> base;
    for (u64 k = 1; k <= 2000; ++k) base.insert(floor_pow(k, rs));
    for (u64 k = 1; k <= 100; ++k) REQUIRE(base.count(floor_pow(floor_pow(k, lambda), rs)) == 1);
    for (u64 e : thinned_values(lambda, rs, 1000)) CHECK(base.count(e) == 1);
}

TEST_CASE("gen_sparse_set for (2,2)") {
    const ExponentSpec spec = spec_of({R(2), R(2)});
    const Split sp = split_lambda(spec);
    const auto set = gen_sparse_set(sp, spec, u64{1} << 20);
    CHECK(set.values == std::vector<u64>{4, 18, 32, 514, 528, 1024, 65538, 65552, 66048, 131072});
    CHECK(gen_sparse_set(sp, spec, 3).values.empty());
    CHECK(gen_sparse_set(sp, spec, 4).values == std::vector<u64>{4});
    CHECK_THROWS_AS(gen_sparse_set(sp, spec, (u64{1} << 62) + 1), DomainError);
    CHECK_THROWS_AS(gen_sparse_set(split_lambda(spec_of({R(1)})), spec_of({R(1)}), 100), DomainError);
}

TEST_CASE("gen_sparse_set for (3/2, 5/2) matches a double-loop oracle") {
    const ExponentSpec spec = spec_of({R(3, 2), R(5, 2)});
    const Split sp = split_lambda(spec);
    const u64 x = u64{1} << 30;
    std::set<u64> oracle;
    for (u64 k1 = 1; k1 <= 64; ++k1)
        for (u64 k2 = 1; k2 <= 64; ++k2) {
            const u64 e1 = floor_pow(k1, R(3, 2));
            const u64 m = floor_pow(k2, R(6, 5));
            const u64 e2 = floor_pow(m, R(5, 2));
            if (e1 > 40 || e2 > 40) continue;
            const u64 v = (u64{1} << e1) + (u64{1} << e2);
            if (v <= x) oracle.insert(v);
        }
    const auto set = gen_sparse_set(sp, spec, x);
    CHECK(set.values == std::vector<u64>(oracle.begin(), oracle.end()));
    CHECK(count_sparse(sp, spec, x) == oracle.size());
}

TEST_CASE("count_sparse") {
    const ExponentSpec spec = spec_of({R(2), R(2)});
    const Split sp = split_lambda(spec);
    CHECK(count_sparse(sp, spec, u128{1} << 20) == 10);
    CHECK(count_sparse(sp, spec, u128{1} << 60) == 28);
    CHECK(count_sparse(sp, spec, 3) == 0);
    for (unsigned j = 2; j <= 62; ++j)
        REQUIRE(count_sparse(sp, spec, u128{1} << j) == gen_sparse_set(sp, spec, u64{1} << j).values.size());
    for (unsigned j = 20; j <= 60; ++j) {
        const double ratio = static_cast<double>(count_sparse(sp, spec, u128{1} << j)) / j;
        CHECK(ratio >= 0.3);
        CHECK(ratio <= 0.8);
    }
    // Beyond machine words: squares <= 100 give 10 exponents, C(10,2)+10 sums.
    CHECK(count_sparse(sp, spec, u128{1} << 101) == 55);
}

TEST_CASE("sparse set values are sums of s powers of two from the right sequences") {
    const ExponentSpec spec = spec_of({R(3, 2), R(7, 3), R(9)});
    const Split sp = split_lambda(spec);
    REQUIRE(sp.kind == SplitKind::Split);
    REQUIRE(sp.s == 2);
    const auto lists = sparse_exponent_lists(sp, spec, u64{1} << 40);
    const auto set = gen_sparse_set(sp, spec, u64{1} << 40);
    std::set<u64> expect;
    for (u64 a : lists[0])
        for (u64 b : lists[1]) {
            const u64 v = (u64{1} << a) + (u64{1} << b);
            if (v <= (u64{1} << 40)) expect.insert(v);
        }
    CHECK(set.values == std::vector<u64>(expect.begin(), expect.end()));
    CHECK(std::is_sorted(set.values.begin(), set.values.end()));
}

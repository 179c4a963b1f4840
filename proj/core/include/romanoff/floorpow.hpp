// floorpow.hpp
// Exact floor-power sequences floor(k^r) for positive rational r, the
// lambda-split of an exponent tuple and the thinned sparse set
//
//   A = { 2^floor(k_1^r_1) + ... + 2^floor(k_{s-1}^r_{s-1})
//         + 2^floor(floor(k_s^lambda)^r_s) }.
//
// Exponents are exact rationals: a decimal such as "1.5" is read as 3/2.

#pragma once

#include "romanoff/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace romanoff {

// Positive rational exponent num/den in lowest terms.
class RationalExp {
public:
    RationalExp() = default;

    // Throws std::invalid_argument unless num, den > 0 and both are at most
    // kMaxPart after reduction.
    static RationalExp make(u64 num, u64 den);
    static RationalExp from(const Rational& value);

    // Accepts "3/2", "1.5", "2". Throws std::invalid_argument naming the
    // offending token.
    static RationalExp parse(std::string_view token);

    u64 num() const { return num_; }
    u64 den() const { return den_; }
    Rational value() const { return Rational(num_, den_); }
    Rational inverse() const { return Rational(den_, num_); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }
    std::string str() const;

    friend bool operator==(const RationalExp&, const RationalExp&) = default;

    static constexpr u64 kMaxPart = 1'000'000'000;

private:
    RationalExp(u64 num, u64 den) : num_(num), den_(den) {}

    u64 num_ = 1;
    u64 den_ = 1;
};

struct ExponentSpec {
    std::vector<RationalExp> rs;

    // Comma-separated exponents, e.g. "1.5,2.5" or "3/2,5/2".
    static ExponentSpec parse(std::string_view csv);

    // sum of 1/r_i, exact.
    Rational inverse_sum() const;
    std::string str() const;
};

enum class SplitKind { FullRomanoff, Split, Deficient };

std::string to_string(SplitKind kind);

// Classification of an exponent tuple. For kind == Split, s is the (1-based)
// least index whose partial inverse sum reaches 1 and lambda >= 1 solves
//   1/r_1 + ... + 1/r_{s-1} + 1/(lambda r_s) = 1.
// For kind == FullRomanoff, s is the first index with r_s <= 1.
struct Split {
    SplitKind kind = SplitKind::Deficient;
    std::size_t s = 0;
    RationalExp lambda;
};

struct SparseSet {
    u64 bound = 0;
    std::vector<u64> values;
};

// One distinct value of floor(k^r), with the least k producing it. For r < 1
// that k can exceed 64 bits.
struct FloorPowTerm {
    BigInt k;
    u64 exponent;
};

// floor(k^(num/den)) exactly. Throws std::overflow_error when the value does
// not fit in 64 bits and DomainError for k == 0.
u64 floor_pow(u64 k, RationalExp r);

// floor(log2 x) for x >= 1.
unsigned floor_log2(u128 x);

// Distinct values of floor(k^r) not exceeding max_exp, ascending.
std::vector<u64> seq_values(RationalExp r, u64 max_exp);
std::vector<FloorPowTerm> seq_terms(RationalExp r, u64 max_exp);

// Distinct values of floor(floor(k^lambda)^r) not exceeding max_exp.
std::vector<u64> thinned_values(RationalExp lambda, RationalExp r, u64 max_exp);

Split split_lambda(const ExponentSpec& spec);

// Exponent lists of the sparse set: seq_values(r_i) for i < s and the
// lambda-thinned list for index s, each capped at floor(log2 x).
std::vector<std::vector<u64>> sparse_exponent_lists(const Split& split,
                                                    const ExponentSpec& spec, u128 x);

// Distinct sums 2^e_1 + ... + 2^e_m <= x, one exponent from each list.
// Lists must be ascending. Requires x <= 2^62.
std::vector<u64> exponent_tuple_sums(const std::vector<std::vector<u64>>& lists, u64 x);

// Throws DomainError unless split.kind == Split and x <= 2^62.
SparseSet gen_sparse_set(const Split& split, const ExponentSpec& spec, u64 x);

// |A(x)| for x up to 2^126; sums are formed in 128-bit words, never as a
// SparseSet.
u64 count_sparse(const Split& split, const ExponentSpec& spec, u128 x);

}  // namespace romanoff

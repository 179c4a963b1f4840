// floorpow.cpp

#include "romanoff/floorpow.hpp"

#include "romanoff/arith.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace romanoff {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_token(std::string_view token, const char* why) {
    throw std::invalid_argument("malformed exponent '" + std::string(token) + "': " + why);
}

u64 parse_digits(std::string_view digits, std::string_view token) {
    if (digits.empty()) bad_token(token, "missing digits");
    u64 v = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') bad_token(token, "unexpected character");
        if (v > (RationalExp::kMaxPart * 10)) bad_token(token, "too large");
        v = v * 10 + static_cast<u64>(c - '0');
    }
    return v;
}

unsigned bit_length(u64 v) { return 64 - static_cast<unsigned>(std::countl_zero(v)); }

// Depth-first over one exponent per list; lists ascend so the inner loop can
// stop at the first overshoot.
template <class Word, class Sink>
void for_each_tuple_sum(const std::vector<std::vector<u64>>& lists, Word x, std::size_t depth,
                        Word partial, Sink& sink) {
    if (depth == lists.size()) {
        sink(partial);
        return;
    }
    for (u64 e : lists[depth]) {
        const Word term = Word{1} << e;
        if (term > x || partial > x - term) break;
        for_each_tuple_sum(lists, x, depth + 1, partial + term, sink);
    }
}

}  // namespace

// -------------------------------------------------------
// RationalExp / ExponentSpec
// -------------------------------------------------------

RationalExp RationalExp::make(u64 num, u64 den) {
    if (num == 0 || den == 0) throw std::invalid_argument("exponent must be a positive rational");
    const u64 g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num > kMaxPart || den > kMaxPart)
        throw std::invalid_argument("exponent " + std::to_string(num) + "/" + std::to_string(den) +
                                    " has too many digits");
    return RationalExp(num, den);
}

RationalExp RationalExp::from(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (num <= 0) throw std::invalid_argument("exponent must be positive");
    if (num > kMaxPart || den > kMaxPart)
        throw std::invalid_argument("exponent " + romanoff::to_string(value) + " has too many digits");
    return make(num.convert_to<u64>(), den.convert_to<u64>());
}

RationalExp RationalExp::parse(std::string_view token) {
    const std::string_view t = trim(token);
    if (t.empty()) bad_token(token, "empty");
    if (const auto slash = t.find('/'); slash != std::string_view::npos) {
        const u64 num = parse_digits(trim(t.substr(0, slash)), token);
        const u64 den = parse_digits(trim(t.substr(slash + 1)), token);
        if (num == 0 || den == 0) bad_token(token, "numerator and denominator must be positive");
        if (num > kMaxPart || den > kMaxPart) bad_token(token, "too large");
        return make(num, den);
    }
    const auto dot = t.find('.');
    const std::string_view whole = t.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : t.substr(dot + 1);
    if (dot != std::string_view::npos && frac.empty() && whole.empty()) bad_token(token, "missing digits");
    if (frac.size() > 6) bad_token(token, "more than 6 decimal places");
    const u64 w = whole.empty() ? 0 : parse_digits(whole, token);
    const u64 f = frac.empty() ? 0 : parse_digits(frac, token);
    u64 den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (w > kMaxPart) bad_token(token, "too large");
    const u64 num = w * den + f;
    if (num == 0) bad_token(token, "exponent must be positive");
    return make(num, den);
}

std::string RationalExp::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

ExponentSpec ExponentSpec::parse(std::string_view csv) {
    ExponentSpec spec;
    std::size_t start = 0;
    while (true) {
        const auto comma = csv.find(',', start);
        spec.rs.push_back(RationalExp::parse(csv.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return spec;
}

Rational ExponentSpec::inverse_sum() const {
    Rational sum = 0;
    for (const auto& r : rs) sum += r.inverse();
    return sum;
}

std::string ExponentSpec::str() const {
    std::string out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out += ',';
        out += rs[i].str();
    }
    return out;
}

std::string to_string(SplitKind kind) {
    switch (kind) {
        case SplitKind::FullRomanoff: return "full_romanoff";
        case SplitKind::Split: return "split";
        case SplitKind::Deficient: return "deficient";
    }
    return "?";
}

// -------------------------------------------------------
// Floor powers
// -------------------------------------------------------

u64 floor_pow(u64 k, RationalExp r) {
    if (k == 0) throw DomainError("floor_pow: k must be positive");
    if (k == 1) return 1;
    if (r.den() == 1 && r.num() == 1) return k;

    if (static_cast<u64>(bit_length(k)) * r.num() <= 126) {
        u128 power = 1;
        for (u64 i = 0; i < r.num(); ++i) power *= k;
        const u128 root = int_root(power, static_cast<unsigned>(r.den()));
        if (root > std::numeric_limits<u64>::max())
            throw std::overflow_error("floor_pow: value exceeds 64 bits");
        return static_cast<u64>(root);
    }
    const BigInt power = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(r.num()));
    const BigInt root = int_root(power, static_cast<unsigned>(r.den()));
    if (root > std::numeric_limits<u64>::max())
        throw std::overflow_error("floor_pow: value exceeds 64 bits");
    return root.convert_to<u64>();
}

unsigned floor_log2(u128 x) {
    if (x == 0) throw DomainError("floor_log2: x must be positive");
    const auto hi = static_cast<u64>(x >> 64);
    if (hi != 0) return 64 + bit_length(hi) - 1;
    return bit_length(static_cast<u64>(x)) - 1;
}

std::vector<u64> seq_values(RationalExp r, u64 max_exp) {
    std::vector<u64> out;
    if (max_exp == 0) return out;
    if (r.num() <= r.den()) {
        // Increments of floor(k^r) are at most 1 when r <= 1, starting at 1.
        out.resize(max_exp);
        std::iota(out.begin(), out.end(), u64{1});
        return out;
    }
    for (u64 k = 1;; ++k) {
        const u64 v = floor_pow(k, r);
        if (v > max_exp) break;
        out.push_back(v);  // strictly increasing for r > 1
    }
    return out;
}

std::vector<FloorPowTerm> seq_terms(RationalExp r, u64 max_exp) {
    std::vector<FloorPowTerm> out;
    if (max_exp == 0) return out;
    if (r.num() <= r.den()) {
        if (static_cast<double>(r.den()) * bit_length(max_exp) > double(1u << 20))
            throw DomainError("seq_terms: exponent denominator too large");
        // Least k with k^r >= e is ceil(e^(den/num)).
        for (u64 e = 1; e <= max_exp; ++e) {
            const BigInt target = boost::multiprecision::pow(BigInt(e), static_cast<unsigned>(r.den()));
            out.push_back({int_root(BigInt(target - 1), static_cast<unsigned>(r.num())) + 1, e});
        }
        return out;
    }
    for (u64 k = 1;; ++k) {
        const u64 v = floor_pow(k, r);
        if (v > max_exp) break;
        out.push_back({BigInt(k), v});
    }
    return out;
}

std::vector<u64> thinned_values(RationalExp lambda, RationalExp r, u64 max_exp) {
    std::vector<u64> out;
    for (u64 k = 1;; ++k) {
        const u64 v = floor_pow(floor_pow(k, lambda), r);
        if (v > max_exp) break;
        if (out.empty() || out.back() != v) out.push_back(v);
        if (lambda.num() <= lambda.den() && r.num() <= r.den() && v == max_exp) break;
    }
    return out;
}

// -------------------------------------------------------
// Split and sparse set
// -------------------------------------------------------

Split split_lambda(const ExponentSpec& spec) {
    if (spec.rs.empty()) throw DomainError("split_lambda: empty exponent tuple");
    for (std::size_t i = 0; i < spec.rs.size(); ++i) {
        if (spec.rs[i].num() <= spec.rs[i].den()) return {SplitKind::FullRomanoff, i + 1, RationalExp{}};
    }
    if (spec.inverse_sum() < 1) return {SplitKind::Deficient, 0, RationalExp{}};

    Rational partial = 0;
    for (std::size_t i = 0; i < spec.rs.size(); ++i) {
        const Rational next = partial + spec.rs[i].inverse();
        if (next >= 1) {
            const Rational lambda = Rational(1) / (spec.rs[i].value() * (Rational(1) - partial));
            return {SplitKind::Split, i + 1, RationalExp::from(lambda)};
        }
        partial = next;
    }
    throw std::logic_error("split_lambda: unreachable");
}

std::vector<std::vector<u64>> sparse_exponent_lists(const Split& split, const ExponentSpec& spec,
                                                    u128 x) {
    if (split.kind != SplitKind::Split)
        throw DomainError("sparse set is defined only for a split exponent tuple (got " +
                          to_string(split.kind) + ")");
    if (split.s < 1 || split.s > spec.rs.size()) throw DomainError("split index out of range");
    std::vector<std::vector<u64>> lists;
    if (x < 2) {
        lists.assign(split.s, {});
        return lists;
    }
    const u64 max_exp = floor_log2(x);
    for (std::size_t i = 0; i + 1 < split.s; ++i) lists.push_back(seq_values(spec.rs[i], max_exp));
    lists.push_back(thinned_values(split.lambda, spec.rs[split.s - 1], max_exp));
    return lists;
}

std::vector<u64> exponent_tuple_sums(const std::vector<std::vector<u64>>& lists, u64 x) {
    if (x > kMaxBound) throw DomainError("bound exceeds 2^62");
    std::vector<u64> sums;
    auto sink = [&](u64 v) { sums.push_back(v); };
    for_each_tuple_sum<u64>(lists, x, 0, 0, sink);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

SparseSet gen_sparse_set(const Split& split, const ExponentSpec& spec, u64 x) {
    if (x > kMaxBound) throw DomainError("gen_sparse_set: x exceeds 2^62");
    return {x, exponent_tuple_sums(sparse_exponent_lists(split, spec, x), x)};
}

u64 count_sparse(const Split& split, const ExponentSpec& spec, u128 x) {
    if (x > (u128{1} << 126)) throw DomainError("count_sparse: x exceeds 2^126");
    const auto lists = sparse_exponent_lists(split, spec, x);
    std::vector<u128> sums;
    auto sink = [&](u128 v) { sums.push_back(v); };
    for_each_tuple_sum<u128>(lists, x, 0, 0, sink);
    std::sort(sums.begin(), sums.end());
    return static_cast<u64>(std::unique(sums.begin(), sums.end()) - sums.begin());
}

}  // namespace romanoff

// types.hpp
// Integer widths, exact big-number types and the error type shared by the
// whole library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace romanoff {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest bound accepted by the sumset / density machinery: every element
// of an exponent-sum set and every n fits a machine word with headroom.
inline constexpr u64 kMaxBound = u64{1} << 62;

// Raised when an argument lies outside an operation's mathematical domain
// (even modulus for e2, zero modulus, x above 2^62, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Exact rational -> double.
inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline std::string to_string(const Rational& q) {
    const BigInt& num = boost::multiprecision::numerator(q);
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace romanoff

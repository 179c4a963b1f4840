// cli.hpp
// Command-line front end. run() is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.
#pragma once

#include "romanoff/types.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace romanoff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// args excludes the program name: {"density", "--r", "2,2", "--x", "1e6"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Exact non-negative integer from "1000", "1e7", "2.5e3" or "2^40".
// Throws UsageError when malformed or not an integer, DomainError above 2^62.
u64 parse_count(const std::string& text, const std::string& flag);

// Real from a decimal, "a/b" or "e^t".
double parse_real(const std::string& text, const std::string& flag);

}  // namespace romanoff::cli

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gadic {

/// Exact arbitrary-size integer used for every g_i and every value in the core.
using BigInt = mpz_class;

BigInt to_big(std::uint64_t v);

/// Parses a decimal integer (optional leading '-'). Throws ParseError on junk.
BigInt parse_big(std::string_view text);

std::string to_string(const BigInt& v);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

}  // namespace gadic

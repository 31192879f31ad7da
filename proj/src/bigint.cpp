#include "gadic/bigint.hpp"

#include <cctype>
#include <limits>

#include "gadic/errors.hpp"

namespace gadic {

BigInt to_big(std::uint64_t v) {
  BigInt r;
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

BigInt parse_big(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

bool fits_u64(const BigInt& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw DomainError("integer does not fit in 64 bits: " + to_string(v));
  return mpz_get_ui(v.get_mpz_t());
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace gadic

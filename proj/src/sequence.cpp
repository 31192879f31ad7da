#include "gadic/sequence.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "gadic/errors.hpp"
#include "text_util.hpp"

namespace gadic {

// ---------------------------------------------------------------------------
// DigitRep

DigitRep::DigitRep(Map digits) : digits_(std::move(digits)) {
  std::erase_if(digits_, [](const auto& kv) { return kv.second == 0; });
}

void DigitRep::set(std::size_t j, std::uint64_t x) {
  if (x == 0) {
    digits_.erase(j);
  } else {
    digits_[j] = x;
  }
}

std::uint64_t DigitRep::digit(std::size_t j) const {
  auto it = digits_.find(j);
  return it == digits_.end() ? 0 : it->second;
}

std::vector<std::size_t> DigitRep::support() const {
  std::vector<std::size_t> out;
  out.reserve(digits_.size());
  for (const auto& [j, x] : digits_) out.push_back(j);
  return out;
}

std::size_t DigitRep::max_index() const {
  if (digits_.empty()) throw DomainError("empty digit map has no leading index");
  return digits_.rbegin()->first;
}

std::string DigitRep::to_string() const {
  std::string out;
  for (const auto& [j, x] : digits_) {
    if (!out.empty()) out += ',';
    out += std::to_string(j);
    out += ':';
    out += std::to_string(x);
  }
  return out;
}

DigitRep DigitRep::parse(std::string_view text) {
  text = detail::trim(text);
  DigitRep rep;
  if (text.empty()) return rep;
  std::size_t last = 0;
  bool first = true;
  for (auto item : detail::split(text, ',')) {
    auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected j:x pair, got '" + std::string(item) + "'");
    }
    auto j = detail::parse_u64(item.substr(0, colon));
    auto x = detail::parse_u64(item.substr(colon + 1));
    if (x == 0) throw ParseError("digit pairs must be nonzero: '" + std::string(item) + "'");
    if (!first && j <= last) throw ParseError("digit indices must be strictly increasing");
    rep.digits_[j] = x;
    last = j;
    first = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// GadicSequence

struct GadicSequence::Cache {
  mutable std::shared_mutex mutex;
  std::deque<BigInt> values{BigInt(1)};
};

GadicSequence::GadicSequence(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period)
    : prefix_(std::move(prefix)), period_(std::move(period)), cache_(std::make_shared<Cache>()) {
  if (period_.empty()) throw ValidationError("quotient period must be nonempty");
  for (auto d : prefix_) {
    if (d < 2) throw ValidationError("quotient " + std::to_string(d) + " < 2");
  }
  for (auto d : period_) {
    if (d < 2) throw ValidationError("quotient " + std::to_string(d) + " < 2");
  }
}

GadicSequence GadicSequence::constant(std::uint64_t g) { return GadicSequence({}, {g}); }

std::uint64_t GadicSequence::quotient(std::size_t i) const {
  if (i == 0) throw DomainError("quotients are indexed from 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return period_[(i - 1 - prefix_.size()) % period_.size()];
}

const BigInt& GadicSequence::value(std::size_t i) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (i < cache_->values.size()) return cache_->values[i];
  }
  std::unique_lock lock(cache_->mutex);
  auto& values = cache_->values;
  while (values.size() <= i) {
    BigInt next = values.back() * to_big(quotient(values.size()));
    values.push_back(std::move(next));
  }
  return values[i];
}

BigInt GadicSequence::ratio(std::size_t i, std::size_t j) const {
  if (j == 0) throw DomainError("ratio requires j >= 1");
  BigInt r = 1;
  for (std::size_t k = i + 1; k <= i + j; ++k) r *= to_big(quotient(k));
  return r;
}

DigitRep GadicSequence::represent(const BigInt& n) const {
  if (sgn(n) < 0) throw DomainError("cannot represent negative integer " + gadic::to_string(n));
  DigitRep rep;
  BigInt rest = n;
  for (std::size_t j = 0; sgn(rest) != 0; ++j) {
    auto d = quotient(j + 1);
    auto x = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    rep.set(j, x);
  }
  return rep;
}

void GadicSequence::validate(const DigitRep& rep) const {
  for (const auto& [j, x] : rep.digits()) {
    auto d = quotient(j + 1);
    if (x < 1 || x > d - 1) {
      throw ValidationError("digit " + std::to_string(x) + " at index " + std::to_string(j) +
                            " outside [1, " + std::to_string(d - 1) + "]");
    }
  }
}

BigInt GadicSequence::evaluate(const DigitRep& rep) const {
  validate(rep);
  BigInt sum = 0;
  for (const auto& [j, x] : rep.digits()) sum += value(j) * to_big(x);
  return sum;
}

std::size_t GadicSequence::leading_index(const BigInt& n) const {
  if (sgn(n) <= 0) throw DomainError("leading index is defined for n >= 1");
  return represent(n).max_index();
}

std::string GadicSequence::to_string() const {
  return "prefix=" + detail::format_list(prefix_) + ";period=" + detail::format_list(period_);
}

GadicSequence GadicSequence::parse(std::string_view text) {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> period;
  bool have_period = false;
  for (auto [key, val] : detail::parse_fields(text)) {
    if (key == "prefix") {
      prefix = detail::parse_list(val);
    } else if (key == "period") {
      period = detail::parse_list(val);
      have_period = true;
    } else {
      throw ParseError("unknown sequence field '" + std::string(key) + "'");
    }
  }
  if (!have_period) throw ParseError("sequence spec needs a period");
  return GadicSequence(std::move(prefix), std::move(period));
}

}  // namespace gadic

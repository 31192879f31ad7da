#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gadic/bigint.hpp"

namespace gadic {

/// Sparse 𝒢-adic digit map: index j -> nonzero digit x_j, iterated in increasing j.
/// The empty map represents 0.
class DigitRep {
 public:
  using Map = std::map<std::size_t, std::uint64_t>;

  DigitRep() = default;
  explicit DigitRep(Map digits);

  /// Stores x at position j; x == 0 erases the position.
  void set(std::size_t j, std::uint64_t x);
  std::uint64_t digit(std::size_t j) const;

  const Map& digits() const { return digits_; }
  bool empty() const { return digits_.empty(); }
  std::size_t size() const { return digits_.size(); }
  std::vector<std::size_t> support() const;
  /// max(F); throws DomainError on the empty map.
  std::size_t max_index() const;

  /// Sorted `j:x` pairs joined by commas, e.g. `0:1,2:1`; empty string for 0.
  std::string to_string() const;
  static DigitRep parse(std::string_view text);

  friend bool operator==(const DigitRep&, const DigitRep&) = default;

 private:
  Map digits_;
};

/// A 𝒢-adic sequence given by its quotient stream d_1, d_2, ...: a finite
/// prefix followed by a repeating period. g_0 = 1 and g_i = g_{i-1} d_i.
///
/// Copies share the lazily grown cache of g_i values. Growth is guarded so
/// concurrent readers always see a consistent prefix, and references returned
/// by value() stay valid for the lifetime of the sequence.
class GadicSequence {
 public:
  /// Throws ValidationError if the period is empty or any quotient is < 2.
  GadicSequence(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period);

  /// The classical base-g system, d_i = g for all i.
  static GadicSequence constant(std::uint64_t g);

  const std::vector<std::uint64_t>& prefix() const { return prefix_; }
  const std::vector<std::uint64_t>& period() const { return period_; }

  /// d_i for i >= 1. Throws DomainError for i == 0.
  std::uint64_t quotient(std::size_t i) const;

  /// g_i, exact.
  const BigInt& value(std::size_t i) const;

  /// g_{i+j} / g_i = d_{i+1} ... d_{i+j}, computed as a product. Requires j >= 1.
  BigInt ratio(std::size_t i, std::size_t j) const;

  /// Canonical representation by repeated division with remainder.
  /// Throws DomainError for negative n; represent(0) is the empty map.
  DigitRep represent(const BigInt& n) const;

  /// Σ x_j g_j. Throws ValidationError if some digit is outside [1, d_{j+1} - 1].
  BigInt evaluate(const DigitRep& rep) const;

  /// Throws ValidationError unless every digit lies in [1, d_{j+1} - 1].
  void validate(const DigitRep& rep) const;

  /// M = max(F) for n >= 1, so that g_M <= n < g_{M+1}. Throws DomainError for n <= 0.
  std::size_t leading_index(const BigInt& n) const;

  /// `prefix=[...];period=[...]`
  std::string to_string() const;
  static GadicSequence parse(std::string_view text);

  friend bool operator==(const GadicSequence& a, const GadicSequence& b) {
    return a.prefix_ == b.prefix_ && a.period_ == b.period_;
  }

 private:
  struct Cache;

  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> period_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace gadic

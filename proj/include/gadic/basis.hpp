#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gadic/bigint.hpp"
#include "gadic/partition.hpp"
#include "gadic/sequence.hpp"

namespace gadic {

/// The full configuration of A_G(W): a 𝒢-adic sequence plus an h-class partition.
struct BasisSpec {
  GadicSequence seq;
  PartitionSpec partition;

  std::size_t h() const { return partition.h(); }
  std::string to_string() const;
};

/// Class i with support(n) a nonempty subset of W_i, or nullopt when n = 0 or
/// the support meets two classes.
std::optional<ClassIndex> classify(const BasisSpec& spec, const DigitRep& rep);
std::optional<ClassIndex> classify(const BasisSpec& spec, const BigInt& n);

/// Fixed-length bit set over [0, N] with the shift-or primitive used by sumsets.
class BitWindow {
 public:
  BitWindow() = default;
  explicit BitWindow(std::size_t max_value);

  /// N; the window holds N + 1 bits.
  std::size_t max_value() const { return bits_ - 1; }
  std::size_t bit_count() const { return bits_; }

  bool test(std::size_t n) const { return (words_[n >> 6] >> (n & 63)) & 1u; }
  void set(std::size_t n) { words_[n >> 6] |= std::uint64_t{1} << (n & 63); }
  void reset(std::size_t n) { words_[n >> 6] &= ~(std::uint64_t{1} << (n & 63)); }

  /// this |= (other << shift), truncated to [0, N].
  void or_shifted(const BitWindow& other, std::size_t shift);

  std::size_t count() const;
  std::vector<std::uint64_t> to_vector() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// Raw dump: bit n is bit (n mod 8) of byte n / 8; ceil((N+1)/8) bytes, padding bits zero.
  void write_raw(std::ostream& out) const;

  friend bool operator==(const BitWindow&, const BitWindow&) = default;

 private:
  void clear_tail();

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Members of A_G(W) in [1, N], as a sorted list and as a bit window.
struct MemberWindow {
  std::vector<std::uint64_t> members;
  BitWindow bits;
};

/// Largest window accepted by enumerate and the sumset engine (bits).
inline constexpr std::size_t kDefaultWindowBudget = std::size_t{1} << 30;
inline constexpr std::size_t kDefaultWindow = std::size_t{1} << 20;

/// Exactly the n in [1, N] that classify as members. Throws DomainError for
/// N < 1 and WindowError when N + 1 exceeds `budget` bits.
MemberWindow enumerate(const BasisSpec& spec, std::size_t max_value,
                       std::size_t budget = kDefaultWindowBudget);

/// One integer per line.
void write_member_list(std::ostream& out, const MemberWindow& window);

}  // namespace gadic

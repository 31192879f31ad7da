#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gadic {

using ClassIndex = std::uint32_t;

/// An eventually periodic coloring of N_0 into h classes W_0, ..., W_{h-1}.
/// Every index gets exactly one color, so the classes are disjoint and cover N_0;
/// each class must occur in the period, so each W_i is infinite.
class PartitionSpec {
 public:
  /// Throws ValidationError on h < 2, an empty period, a color outside [0, h-1],
  /// or a class that never occurs in the period.
  PartitionSpec(std::size_t h, std::vector<ClassIndex> prefix, std::vector<ClassIndex> period);

  std::size_t h() const { return h_; }
  const std::vector<ClassIndex>& prefix() const { return prefix_; }
  const std::vector<ClassIndex>& period() const { return period_; }

  ClassIndex color(std::size_t j) const {
    return j < prefix_.size() ? prefix_[j] : period_[(j - prefix_.size()) % period_.size()];
  }

  /// `h=2;prefix=[];period=[0,0,1,1]`
  std::string to_string() const;
  static PartitionSpec parse(std::string_view text);

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

 private:
  std::size_t h_;
  std::vector<ClassIndex> prefix_;
  std::vector<ClassIndex> period_;
};

/// Smallest integer t with 2^{t-1} >= h, the integer form of t >= 1 + log h / log 2.
std::size_t min_t(std::size_t h);

/// Right endpoints M >= 1 of monochromatic windows [M - t + 1, M] in one class.
/// Members below `periodic_start` are listed explicitly; from `periodic_start` on
/// the condition depends only on M mod `modulus` and is stored as residues.
struct IntervalFamily {
  std::vector<std::size_t> prefix_members;
  std::vector<std::size_t> residues;

  /// A nonempty residue set is a proof that the family is infinite.
  bool infinite() const { return !residues.empty(); }
};

struct IntervalFamilies {
  std::size_t t = 0;
  std::size_t modulus = 0;
  std::size_t periodic_start = 0;
  std::vector<IntervalFamily> families;  // one per class

  bool contains(ClassIndex i, std::size_t m) const;

  /// Smallest M in family i with M >= lower. Throws HypothesisError for an empty family.
  std::size_t nth_member(ClassIndex i, std::size_t lower) const;

  /// The k-th (0-based) member of family i that is >= lower.
  std::size_t nth_member(ClassIndex i, std::size_t lower, std::size_t k) const;

  /// True iff every class has an infinite family.
  bool all_infinite() const;

  /// One line per class: `class=1: residues {3} mod 4; prefix-members []`.
  std::string to_string() const;
};

/// Scans the prefix plus the periodic part and reports, per class, every
/// right endpoint M whose trailing t-window is monochromatic in that class.
/// Empty families are a legitimate outcome. Requires t >= 1.
IntervalFamilies detect_interval_families(const PartitionSpec& spec, std::size_t t);

}  // namespace gadic

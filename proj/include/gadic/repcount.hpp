#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gadic/basis.hpp"
#include "gadic/bigint.hpp"
#include "gadic/sequence.hpp"

namespace gadic {

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

/// Ordered representation count of n as a_1 + ... + a_h with every a_s in
/// A_G(W), or in A_G(W) ∪ {0} when zero_allowed.
struct RepCountResult {
  BigInt ordered_count = 0;
  bool zero_allowed = false;
  /// Filled only by the brute-force counter; complete iff tuples_complete.
  std::vector<std::vector<std::uint64_t>> tuples;
  bool tuples_complete = false;
  /// Largest carry seen by the digit DP (0 for brute force).
  std::size_t max_carry = 0;
};

/// Exhaustive window counter: recursive h-way composition over the members of
/// a precomputed window, memoized on (summands left, remainder). Lists tuples
/// up to `cap`. Throws PreconditionError when n lies outside the window.
RepCountResult count_reps_bruteforce(const MemberWindow& window, std::uint64_t n, std::size_t h,
                                     bool zero_allowed, std::size_t cap = kDefaultEnumerationCap);

/// Copy of `window` with `a` removed (no-op if a is not a member).
MemberWindow without(const MemberWindow& window, std::uint64_t a);

/// Digit-level DP over positions 0..max(F) with an additive carry and, per
/// summand, an "empty" / "committed to class i" status. Summands sharing a
/// status are interchangeable, so the state is the carry plus how many
/// summands are empty or committed to each class; binomials restore the
/// ordered count. Exact for arbitrarily large n.
RepCountResult count_reps_digitdp(const BasisSpec& spec, const DigitRep& n, std::size_t h,
                                  bool zero_allowed);

/// Bit n of the result is set iff n is a sum of exactly h members (bits of
/// `members`), for n in [0, N]. h = 1 returns the input.
BitWindow hfold_sumset_window(const BitWindow& members, std::size_t h);

/// A term y g_v of a (not necessarily canonical) decomposition.
struct DigitTerm {
  std::size_t index = 0;
  std::uint64_t digit = 0;

  friend bool operator==(const DigitTerm&, const DigitTerm&) = default;
};

struct PrefixStep {
  std::size_t k = 0;  // 1-based position in the canonical support
  std::size_t index = 0;  // u_k
  BigInt canonical_prefix;  // sum over u_i <= u_k of x_i g_{u_i}
  BigInt alternate_prefix;  // sum over v_j <= u_k of y_j g_{v_j}
  bool holds = false;
};

struct PrefixCheck {
  std::vector<PrefixStep> steps;
  bool holds = false;
};

/// For each k in [1, p], compares the canonical prefix sum up to u_k against
/// the alternate terms with index <= u_k. Throws PreconditionError when a
/// digit y_j is outside [1, d_{v_j+1} - 1] or the two totals differ.
PrefixCheck check_prefix_inequality(const GadicSequence& seq, const DigitRep& canonical,
                                    std::span<const DigitTerm> alternate);

/// Random non-canonical decomposition of the same integer, produced from the
/// canonical digits by `splits` random moves: split a digit y = y' + y'' at one
/// index, or lower one unit of g_v into g_{v-1} + (d_v - 1) g_{v-1}.
std::vector<DigitTerm> random_downward_split(const GadicSequence& seq, const DigitRep& canonical,
                                             std::mt19937_64& rng, std::size_t splits);

}  // namespace gadic

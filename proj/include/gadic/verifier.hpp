#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gadic/basis.hpp"
#include "gadic/bigint.hpp"
#include "gadic/partition.hpp"
#include "gadic/repcount.hpp"

namespace gadic {

inline constexpr const char* kEngineVersions = "digitdp/1 bruteforce/1 sumset/1";

/// Stable 64-bit FNV-1a digest of a configuration string.
std::uint64_t config_hash(std::string_view text);

// ---------------------------------------------------------------------------
// Sumset checks on finite windows

struct BasisReport {
  std::string config;
  std::size_t window = 0;
  std::size_t h = 0;
  bool zero_adjoined = false;
  std::vector<std::uint64_t> gaps;           // values in [0, N] missing from the h-fold sumset
  std::vector<std::uint64_t> expected_gaps;  // what the claim predicts on this window
  bool pass = false;
  double seconds = 0.0;
};

/// h-fold sumset of A_G(W) on [0, N]; passes iff the missing values are exactly
/// [0, min(h - 1, N)]. Members above N cannot reach sums <= N since every member is >= 1.
BasisReport verify_theorem1(const BasisSpec& spec, std::size_t window,
                            std::size_t budget = kDefaultWindowBudget);

struct Theorem2Report {
  BasisReport with_zero;     // {0} ∪ A must cover all of [0, N]
  BasisReport without_zero;  // removing 0 gives back the first check
  bool pass = false;
};

Theorem2Report verify_theorem2(const BasisSpec& spec, std::size_t window,
                               std::size_t budget = kDefaultWindowBudget);

// ---------------------------------------------------------------------------
// Property suites for the leading-index bound and the prefix inequality

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  bool pass = true;
  std::string counterexample;  // first failure, empty on pass
  double seconds = 0.0;
};

/// g_M <= n < g_{M+1} for M = leading_index(n) on `samples` n (half below 10^6,
/// half random 256-bit), plus the converse for every M <= converse_max: all n in
/// [g_M, g_{M+1}) have leading index M (exhaustive up to 2^20 values per M, sampled beyond).
PropertyReport run_leading_index_suite(const GadicSequence& seq, std::size_t samples,
                                       std::uint64_t seed, std::size_t converse_max = 12);

/// Random (canonical, downward-split) pairs; the prefix inequality must hold for every k.
PropertyReport run_prefix_inequality_suite(const GadicSequence& seq, std::size_t samples,
                                           std::uint64_t seed);

// ---------------------------------------------------------------------------
// Minimality witnesses

enum class Verdict { unverified, certified, refuted, engine_error };

std::string_view to_string(Verdict v);

struct WitnessSummand {
  ClassIndex cls = 0;
  DigitRep digits;
  BigInt value;
};

struct WitnessCertificate {
  std::string config;
  std::uint64_t config_hash = 0;
  std::size_t h = 0;
  std::size_t t = 0;
  DigitRep a;
  BigInt a_value;
  ClassIndex a_class = 0;  // original class; the construction treats it as position 0
  std::size_t m0 = 0;      // leading index of a
  std::size_t choice = 0;  // 0-based rank of the M-selection
  std::vector<std::pair<ClassIndex, std::size_t>> m_choices;  // (class i, M_i), i != a_class
  std::vector<WitnessSummand> summands;  // summands[0] is a, then the a_i in class order
  DigitRep n;
  BigInt n_value;
  BigInt expected_count;
  BigInt measured_count;
  std::size_t max_carry = 0;
  std::optional<BigInt> bruteforce_count;
  std::optional<BigInt> bruteforce_without_a;
  std::optional<bool> bruteforce_tuples_match;
  Verdict verdict = Verdict::unverified;
  std::string note;

  /// cert_<a>_<M_i ...>.txt
  std::string file_name() const;
  /// Line-oriented `key: value` document; no timestamps, so identical runs are byte-identical.
  std::string to_text() const;
};

/// Builds the witness for removing `a`: M_0 = leading_index(a); for every other
/// class i, M_i is the `choice`-th member of the interval family i with
/// M_i >= M_0 + t, and a_i = Σ_{j in W_i, j < M_0} (d_{j+1} - 1) g_j + g_{M_i}.
/// n = a + Σ a_i is assembled in digit space (the supports are disjoint).
/// Throws DomainError if a is not a member, HypothesisError on an empty family.
WitnessCertificate construct_witness(const BasisSpec& spec, const IntervalFamilies& families,
                                     const BigInt& a, std::size_t choice = 0);

/// Same, detecting the families for t. Throws HypothesisError when t < min_t(h)
/// and `override_threshold` is false.
WitnessCertificate construct_witness(const BasisSpec& spec, std::size_t t, const BigInt& a,
                                     std::size_t choice = 0, bool override_threshold = false);

/// Fills the counts and the verdict. Certified iff the digit-DP ordered count of
/// n equals the number of orderings of the summand multiset and a belongs to it.
/// When `window` covers n, the brute-force counter re-derives the tuple list and
/// confirms zero representations over A \ {a}.
WitnessCertificate verify_witness(const BasisSpec& spec, WitnessCertificate cert,
                                  const MemberWindow* window = nullptr);

/// h! / Π (multiplicity)! over the summand values.
BigInt permutation_count(std::span<const BigInt> values);

struct MinimalityOptions {
  bool override_threshold = false;
  std::size_t threads = 1;
  std::uint64_t crosscheck_limit = 1'000'000;
  std::size_t gate_window = 4096;
};

struct MinimalityBatch {
  BasisReport gate;  // asymptotic-basis check run before any witness
  std::vector<WitnessCertificate> certificates;  // input order: member, then M-choice
  std::size_t certified = 0;
  bool pass = false;
};

/// The first `members` elements of A_G(W) in increasing order.
std::vector<BigInt> first_members(const BasisSpec& spec, std::size_t members);

/// For each of the first K members a, `witnesses` certificates with the
/// successive admissible M-choices. Throws HypothesisError when t is below the
/// threshold without override or some class has no t-interval family.
MinimalityBatch verify_minimality(const BasisSpec& spec, std::size_t t, std::size_t members,
                                  std::size_t witnesses, const MinimalityOptions& options = {});

// ---------------------------------------------------------------------------
// Exploration (window evidence only, never a certificate)

struct RemovalEvidence {
  std::uint64_t removed = 0;
  std::size_t misses = 0;                 // values in [0, N] missing after removal
  std::optional<std::uint64_t> last_miss;
  std::uint64_t threshold = 0;            // last_miss + 1, or 0
  bool tail_covered = false;              // no miss in (N/2, N]
};

struct RemovabilityScan {
  std::size_t window = 0;
  std::size_t h = 0;
  RemovalEvidence baseline;  // nothing removed from {0} ∪ A
  std::vector<RemovalEvidence> rows;
};

/// For every a in ({0} ∪ A) ∩ [0, max_element], recomputes the h-fold sumset of
/// ({0} ∪ A) \ {a} on [0, N].
RemovabilityScan removability_scan(const BasisSpec& spec, std::size_t window,
                                   std::size_t max_element,
                                   std::size_t budget = kDefaultWindowBudget);

struct SweepRow {
  std::size_t t = 0;
  std::size_t min_t = 0;
  bool below_threshold = false;
  bool families_infinite = false;
  std::string status;  // "hypothesis-violated", "all-certified", "some-uncertified"
  std::size_t certified = 0;
  std::size_t total = 0;
};

/// Runs a minimality batch for each t (threshold override on) and tabulates outcomes.
std::vector<SweepRow> sweep_t(const BasisSpec& spec, std::span<const std::size_t> ts,
                              std::size_t members, std::size_t witnesses,
                              std::size_t threads = 1);

}  // namespace gadic

#include "gadic/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gadic/errors.hpp"

namespace gadic {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BitWindow member_bits(const BasisSpec& spec, std::size_t window, std::size_t budget) {
  if (window == 0) return BitWindow(0);
  return enumerate(spec, window, budget).bits;
}

std::vector<std::uint64_t> missing(const BitWindow& bits) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n <= bits.max_value(); ++n) {
    if (!bits.test(n)) out.push_back(n);
  }
  return out;
}

RemovalEvidence evidence_from(const BitWindow& sums, std::uint64_t removed) {
  RemovalEvidence ev;
  ev.removed = removed;
  const auto n_max = sums.max_value();
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (sums.test(n)) continue;
    ++ev.misses;
    ev.last_miss = n;
  }
  ev.threshold = ev.last_miss ? *ev.last_miss + 1 : 0;
  ev.tail_covered = !ev.last_miss || *ev.last_miss <= n_max / 2;
  return ev;
}

template <class F>
void parallel_for(std::size_t count, std::size_t threads, F&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(threads, count); ++w) {
      pool.emplace_back([&] {
        for (auto i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t config_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Sumset checks

BasisReport verify_theorem1(const BasisSpec& spec, std::size_t window, std::size_t budget) {
  auto start = Clock::now();
  BasisReport report;
  report.config = spec.to_string();
  report.window = window;
  report.h = spec.h();
  auto sums = hfold_sumset_window(member_bits(spec, window, budget), spec.h());
  report.gaps = missing(sums);
  for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(spec.h() - 1, window); ++n) {
    report.expected_gaps.push_back(n);
  }
  report.pass = report.gaps == report.expected_gaps;
  report.seconds = seconds_since(start);
  return report;
}

Theorem2Report verify_theorem2(const BasisSpec& spec, std::size_t window, std::size_t budget) {
  auto start = Clock::now();
  Theorem2Report out;
  auto& with_zero = out.with_zero;
  with_zero.config = spec.to_string();
  with_zero.window = window;
  with_zero.h = spec.h();
  with_zero.zero_adjoined = true;
  auto members = member_bits(spec, window, budget);
  members.set(0);
  with_zero.gaps = missing(hfold_sumset_window(members, spec.h()));
  with_zero.pass = with_zero.gaps.empty();
  with_zero.seconds = seconds_since(start);

  out.without_zero = verify_theorem1(spec, window, budget);
  out.pass = with_zero.pass && out.without_zero.pass;
  return out;
}

// ---------------------------------------------------------------------------
// Property suites

PropertyReport run_leading_index_suite(const GadicSequence& seq, std::size_t samples,
                                       std::uint64_t seed, std::size_t converse_max) {
  auto start = Clock::now();
  PropertyReport report;
  report.name = "leading-index";
  std::mt19937_64 rng(seed);
  gmp_randclass big_rng(gmp_randinit_mt);
  big_rng.seed(static_cast<unsigned long>(seed));

  auto check = [&](const BigInt& n) {
    ++report.cases;
    auto m = seq.leading_index(n);
    bool ok = seq.value(m) <= n && n < seq.value(m + 1);
    if (!ok && report.pass) {
      report.pass = false;
      report.counterexample = "n=" + to_string(n) + " M=" + std::to_string(m);
    }
    return m;
  };

  std::uniform_int_distribution<std::uint64_t> small(1, 1'000'000);
  for (std::size_t i = 0; i < samples; ++i) {
    BigInt n = i < samples / 2 ? to_big(small(rng)) : BigInt(big_rng.get_z_bits(256));
    if (sgn(n) == 0) n = 1;
    check(n);
  }

  constexpr std::uint64_t kExhaustive = std::uint64_t{1} << 20;
  constexpr std::size_t kSampled = 4096;
  for (std::size_t m = 0; m <= converse_max; ++m) {
    const BigInt lo = seq.value(m);
    const BigInt span = seq.value(m + 1) - lo;
    auto expect = [&](const BigInt& n) {
      ++report.cases;
      auto got = seq.leading_index(n);
      if (got != m && report.pass) {
        report.pass = false;
        report.counterexample = "n=" + to_string(n) + " in [g_" + std::to_string(m) + ", g_" +
                                std::to_string(m + 1) + ") has leading index " +
                                std::to_string(got);
      }
    };
    if (span <= to_big(kExhaustive)) {
      for (BigInt n = lo; n < lo + span; ++n) expect(n);
    } else {
      expect(lo);
      expect(lo + span - 1);
      for (std::size_t s = 0; s < kSampled; ++s) expect(lo + BigInt(big_rng.get_z_range(span)));
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

PropertyReport run_prefix_inequality_suite(const GadicSequence& seq, std::size_t samples,
                                           std::uint64_t seed) {
  auto start = Clock::now();
  PropertyReport report;
  report.name = "prefix-inequality";
  std::mt19937_64 rng(seed);
  gmp_randclass big_rng(gmp_randinit_mt);
  big_rng.seed(static_cast<unsigned long>(seed));
  std::uniform_int_distribution<std::uint64_t> small(1, 1'000'000);
  std::uniform_int_distribution<std::size_t> split_count(1, 24);

  for (std::size_t i = 0; i < samples; ++i) {
    BigInt n = i % 2 == 0 ? to_big(small(rng)) : BigInt(big_rng.get_z_bits(128) + 1);
    auto canonical = seq.represent(n);
    auto alternate = random_downward_split(seq, canonical, rng, split_count(rng));
    auto result = check_prefix_inequality(seq, canonical, alternate);
    ++report.cases;
    if (!result.holds && report.pass) {
      report.pass = false;
      std::ostringstream os;
      os << "n=" << to_string(n) << " canonical=" << canonical.to_string() << " alternate=";
      for (const auto& term : alternate) os << '(' << term.index << ',' << term.digit << ')';
      report.counterexample = os.str();
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// Witnesses

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::unverified: return "unverified";
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::engine_error: return "engine-error";
  }
  return "unknown";
}

std::string WitnessCertificate::file_name() const {
  std::string out = "cert_" + gadic::to_string(a_value);
  for (const auto& [cls, m] : m_choices) out += "_" + std::to_string(m);
  return out + ".txt";
}

std::string WitnessCertificate::to_text() const {
  std::ostringstream os;
  os << "certificate: minimality-witness\n";
  os << "claim: minimal-asymptotic-basis\n";
  os << "config: " << config << '\n';
  os << "config_hash: " << std::hex << std::setw(16) << std::setfill('0') << config_hash
     << std::dec << '\n';
  os << "h: " << h << '\n';
  os << "t: " << t << '\n';
  os << "a: " << a.to_string() << '\n';
  os << "a_value: " << gadic::to_string(a_value) << '\n';
  os << "class: " << a_class << '\n';
  os << "M_0: " << m0 << '\n';
  os << "choice: " << choice << '\n';
  os << "M:";
  for (const auto& [cls, m] : m_choices) os << ' ' << cls << '=' << m;
  os << '\n';
  os << "summands:";
  for (std::size_t i = 0; i < summands.size(); ++i) {
    os << (i ? "; " : " ") << summands[i].cls << '@' << summands[i].digits.to_string();
  }
  os << '\n';
  os << "summand_values:";
  for (std::size_t i = 0; i < summands.size(); ++i) {
    os << (i ? "; " : " ") << gadic::to_string(summands[i].value);
  }
  os << '\n';
  os << "n: " << n.to_string() << '\n';
  os << "n_value: " << gadic::to_string(n_value) << '\n';
  os << "expected_count: " << gadic::to_string(expected_count) << '\n';
  os << "measured_count: " << gadic::to_string(measured_count) << '\n';
  os << "max_carry: " << max_carry << '\n';
  if (bruteforce_count) os << "bruteforce_count: " << gadic::to_string(*bruteforce_count) << '\n';
  if (bruteforce_without_a) {
    os << "bruteforce_without_a: " << gadic::to_string(*bruteforce_without_a) << '\n';
  }
  if (bruteforce_tuples_match) {
    os << "bruteforce_tuples: " << (*bruteforce_tuples_match ? "match" : "mismatch") << '\n';
  }
  if (!note.empty()) os << "note: " << note << '\n';
  os << "verdict: " << gadic::to_string(verdict) << '\n';
  os << "engines: " << kEngineVersions << '\n';
  return os.str();
}

WitnessCertificate construct_witness(const BasisSpec& spec, const IntervalFamilies& families,
                                     const BigInt& a, std::size_t choice) {
  if (sgn(a) <= 0) throw DomainError("removed element must be a positive member");
  auto rep = spec.seq.represent(a);
  auto cls = classify(spec, rep);
  if (!cls) throw DomainError(to_string(a) + " is not a member of A_G(W)");

  WitnessCertificate cert;
  cert.config = spec.to_string();
  cert.config_hash = config_hash(cert.config);
  cert.h = spec.h();
  cert.t = families.t;
  cert.a = rep;
  cert.a_value = a;
  cert.a_class = *cls;
  cert.m0 = rep.max_index();
  cert.choice = choice;
  cert.summands.push_back({*cls, rep, a});

  DigitRep::Map n_digits = rep.digits();
  BigInt total = a;
  for (ClassIndex i = 0; i < spec.h(); ++i) {
    if (i == *cls) continue;
    auto mi = families.nth_member(i, cert.m0 + families.t, choice);
    cert.m_choices.emplace_back(i, mi);
    DigitRep::Map digits;
    for (std::size_t j = 0; j < cert.m0; ++j) {
      if (spec.partition.color(j) == i) digits[j] = spec.seq.quotient(j + 1) - 1;
    }
    digits[mi] = 1;
    for (const auto& [j, x] : digits) {
      if (!n_digits.emplace(j, x).second) {
        throw std::logic_error("witness summands overlap at index " + std::to_string(j));
      }
    }
    DigitRep summand(std::move(digits));
    BigInt value = spec.seq.evaluate(summand);
    total += value;
    cert.summands.push_back({i, std::move(summand), std::move(value)});
  }
  cert.n = DigitRep(std::move(n_digits));
  cert.n_value = spec.seq.evaluate(cert.n);
  if (cert.n_value != total) throw std::logic_error("witness digit sum disagrees with summands");
  return cert;
}

WitnessCertificate construct_witness(const BasisSpec& spec, std::size_t t, const BigInt& a,
                                     std::size_t choice, bool override_threshold) {
  if (!override_threshold && t < min_t(spec.h())) {
    throw HypothesisError("t=" + std::to_string(t) + " is below the threshold " +
                          std::to_string(min_t(spec.h())) + " for h=" + std::to_string(spec.h()));
  }
  return construct_witness(spec, detect_interval_families(spec.partition, t), a, choice);
}

BigInt permutation_count(std::span<const BigInt> values) {
  std::vector<BigInt> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  BigInt out = factorial(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out /= factorial(j - i);
    i = j;
  }
  return out;
}

WitnessCertificate verify_witness(const BasisSpec& spec, WitnessCertificate cert,
                                  const MemberWindow* window) {
  std::vector<BigInt> values;
  for (const auto& s : cert.summands) values.push_back(s.value);
  cert.expected_count = permutation_count(values);
  const bool a_present = std::find(values.begin(), values.end(), cert.a_value) != values.end();

  auto dp = count_reps_digitdp(spec, cert.n, cert.h, false);
  cert.measured_count = dp.ordered_count;
  cert.max_carry = dp.max_carry;

  bool crosscheck_ok = true;
  if (window && window->bits.bit_count() > 0 && fits_u64(cert.n_value) &&
      to_u64(cert.n_value) <= window->bits.max_value()) {
    const auto n = to_u64(cert.n_value);
    auto bf = count_reps_bruteforce(*window, n, cert.h, false);
    cert.bruteforce_count = bf.ordered_count;

    std::vector<std::uint64_t> perm;
    for (const auto& v : values) perm.push_back(to_u64(v));
    std::sort(perm.begin(), perm.end());
    std::vector<std::vector<std::uint64_t>> expected_tuples;
    do {
      expected_tuples.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto listed = bf.tuples;
    std::sort(listed.begin(), listed.end());
    cert.bruteforce_tuples_match = bf.tuples_complete && listed == expected_tuples;

    auto without_a = count_reps_bruteforce(without(*window, to_u64(cert.a_value)), n, cert.h,
                                           false, 0);
    cert.bruteforce_without_a = without_a.ordered_count;
    crosscheck_ok = bf.ordered_count == dp.ordered_count;
    if (!crosscheck_ok) cert.note = "digit DP and brute force disagree";
  }

  if (cert.measured_count < cert.expected_count) {
    cert.verdict = Verdict::engine_error;
    cert.note = "constructed representation not counted";
  } else if (!crosscheck_ok) {
    cert.verdict = Verdict::engine_error;
  } else if (cert.measured_count == cert.expected_count && a_present) {
    const bool bf_consistent =
        !cert.bruteforce_count ||
        (*cert.bruteforce_tuples_match && sgn(*cert.bruteforce_without_a) == 0);
    cert.verdict = bf_consistent ? Verdict::certified : Verdict::engine_error;
    if (!bf_consistent) cert.note = "brute-force tuple list inconsistent with certified count";
  } else {
    cert.verdict = Verdict::refuted;
  }
  return cert;
}

std::vector<BigInt> first_members(const BasisSpec& spec, std::size_t members) {
  std::vector<BigInt> out;
  if (members == 0) return out;
  std::size_t window = 64;
  while (true) {
    auto w = enumerate(spec, window);
    if (w.members.size() >= members) {
      for (std::size_t i = 0; i < members; ++i) out.push_back(to_big(w.members[i]));
      return out;
    }
    window *= 2;
  }
}

MinimalityBatch verify_minimality(const BasisSpec& spec, std::size_t t, std::size_t members,
                                  std::size_t witnesses, const MinimalityOptions& options) {
  const auto h = spec.h();
  if (!options.override_threshold && t < min_t(h)) {
    throw HypothesisError("t=" + std::to_string(t) + " is below the threshold " +
                          std::to_string(min_t(h)) + " for h=" + std::to_string(h));
  }
  auto families = detect_interval_families(spec.partition, t);
  for (std::size_t i = 0; i < families.families.size(); ++i) {
    if (!families.families[i].infinite()) {
      throw HypothesisError("class " + std::to_string(i) + " has no t-interval family for t=" +
                            std::to_string(t));
    }
  }

  MinimalityBatch batch;
  batch.gate = verify_theorem1(spec, std::max(options.gate_window, h));
  if (!batch.gate.pass) return batch;

  std::vector<WitnessCertificate> pending;
  for (const auto& a : first_members(spec, members)) {
    for (std::size_t w = 0; w < witnesses; ++w) {
      pending.push_back(construct_witness(spec, families, a, w));
    }
  }

  std::uint64_t window_max = 0;
  for (const auto& cert : pending) {
    if (fits_u64(cert.n_value) && to_u64(cert.n_value) <= options.crosscheck_limit) {
      window_max = std::max(window_max, to_u64(cert.n_value));
    }
  }
  std::optional<MemberWindow> window;
  if (window_max > 0) window = enumerate(spec, window_max);

  batch.certificates.resize(pending.size());
  parallel_for(pending.size(), options.threads, [&](std::size_t i) {
    batch.certificates[i] =
        verify_witness(spec, std::move(pending[i]), window ? &*window : nullptr);
  });
  batch.certified = static_cast<std::size_t>(
      std::count_if(batch.certificates.begin(), batch.certificates.end(),
                    [](const auto& c) { return c.verdict == Verdict::certified; }));
  batch.pass = batch.certified == batch.certificates.size();
  return batch;
}

// ---------------------------------------------------------------------------
// Exploration

RemovabilityScan removability_scan(const BasisSpec& spec, std::size_t window,
                                   std::size_t max_element, std::size_t budget) {
  RemovabilityScan scan;
  scan.window = window;
  scan.h = spec.h();
  auto base = member_bits(spec, window, budget);
  base.set(0);
  scan.baseline = evidence_from(hfold_sumset_window(base, spec.h()), 0);
  scan.baseline.removed = 0;

  for (auto a : base.to_vector()) {
    if (a > max_element) break;
    auto reduced = base;
    reduced.reset(a);
    scan.rows.push_back(evidence_from(hfold_sumset_window(reduced, spec.h()), a));
  }
  return scan;
}

std::vector<SweepRow> sweep_t(const BasisSpec& spec, std::span<const std::size_t> ts,
                              std::size_t members, std::size_t witnesses, std::size_t threads) {
  std::vector<SweepRow> rows;
  for (auto t : ts) {
    SweepRow row;
    row.t = t;
    row.min_t = min_t(spec.h());
    row.below_threshold = t < row.min_t;
    row.families_infinite = t >= 1 && detect_interval_families(spec.partition, t).all_infinite();
    if (!row.families_infinite) {
      row.status = "hypothesis-violated";
      rows.push_back(row);
      continue;
    }
    MinimalityOptions options;
    options.override_threshold = true;
    options.threads = threads;
    auto batch = verify_minimality(spec, t, members, witnesses, options);
    row.certified = batch.certified;
    row.total = batch.certificates.size();
    row.status = !batch.gate.pass ? "gate-failed"
                 : batch.pass     ? "all-certified"
                                  : "some-uncertified";
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gadic

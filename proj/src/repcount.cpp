#include "gadic/repcount.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "gadic/errors.hpp"

namespace gadic {

// ---------------------------------------------------------------------------
// Brute force over a window

namespace {

class Composer {
 public:
  Composer(const MemberWindow& window, std::size_t h, bool zero_allowed)
      : window_(window), zero_allowed_(zero_allowed), memo_(h + 1) {}

  std::uint64_t count(std::size_t k, std::uint64_t rem) {
    if (k == 0) return rem == 0 ? 1 : 0;
    if (k == 1) return is_choice(rem) ? 1 : 0;
    auto& memo = memo_[k];
    if (auto it = memo.find(rem); it != memo.end()) return it->second;
    std::uint64_t total = zero_allowed_ ? count(k - 1, rem) : 0;
    const auto& ms = window_.members;
    for (auto it = ms.begin(); it != ms.end() && *it <= rem; ++it) {
      if (__builtin_add_overflow(total, count(k - 1, rem - *it), &total)) {
        throw std::overflow_error("brute-force representation count exceeds 64 bits");
      }
    }
    memo.emplace(rem, total);
    return total;
  }

  void list(std::size_t k, std::uint64_t rem, std::vector<std::uint64_t>& prefix,
            std::vector<std::vector<std::uint64_t>>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (k == 0) {
      if (rem == 0) out.push_back(prefix);
      return;
    }
    auto visit = [&](std::uint64_t a) {
      if (count(k - 1, rem - a) == 0) return;
      prefix.push_back(a);
      list(k - 1, rem - a, prefix, out, cap);
      prefix.pop_back();
    };
    if (zero_allowed_) visit(0);
    for (auto it = window_.members.begin(); it != window_.members.end() && *it <= rem; ++it) {
      if (out.size() >= cap) return;
      visit(*it);
    }
  }

 private:
  bool is_choice(std::uint64_t x) const {
    if (x == 0) return zero_allowed_;
    return x <= window_.bits.max_value() && window_.bits.test(x);
  }

  const MemberWindow& window_;
  bool zero_allowed_;
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> memo_;
};

}  // namespace

RepCountResult count_reps_bruteforce(const MemberWindow& window, std::uint64_t n, std::size_t h,
                                     bool zero_allowed, std::size_t cap) {
  if (h < 1) throw DomainError("number of summands must be >= 1");
  if (window.bits.bit_count() == 0 || n > window.bits.max_value()) {
    throw PreconditionError("n = " + std::to_string(n) + " lies outside the enumerated window");
  }
  Composer composer(window, h, zero_allowed);
  RepCountResult result;
  result.zero_allowed = zero_allowed;
  auto total = composer.count(h, n);
  result.ordered_count = to_big(total);
  if (cap > 0) {
    std::vector<std::uint64_t> prefix;
    composer.list(h, n, prefix, result.tuples, cap);
  }
  result.tuples_complete = result.tuples.size() == total;
  return result;
}

MemberWindow without(const MemberWindow& window, std::uint64_t a) {
  MemberWindow out = window;
  auto it = std::lower_bound(out.members.begin(), out.members.end(), a);
  if (it != out.members.end() && *it == a) {
    out.members.erase(it);
    out.bits.reset(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Digit DP

namespace {

BigInt from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt r = to_big(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += to_big(static_cast<std::uint64_t>(u));
  return neg ? BigInt(-r) : r;
}

/// Number of k-tuples with entries in [1, m] summing to s (inclusion-exclusion).
class CompositionCounter {
 public:
  const BigInt& operator()(std::size_t k, __int128 s, std::uint64_t m) {
    auto key = std::make_tuple(k, s, m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    BigInt total = 0;
    if (k == 0) {
      total = s == 0 ? 1 : 0;
    } else {
      for (std::size_t i = 0; i <= k; ++i) {
        __int128 top = s - static_cast<__int128>(i) * m - 1;
        if (top < static_cast<__int128>(k) - 1) break;
        BigInt term;
        BigInt top_big = from_i128(top);
        mpz_bin_ui(term.get_mpz_t(), top_big.get_mpz_t(), k - 1);
        term *= binomial(k, i);
        if (i % 2) {
          total -= term;
        } else {
          total += term;
        }
      }
    }
    return cache_.emplace(key, std::move(total)).first->second;
  }

 private:
  std::map<std::tuple<std::size_t, __int128, std::uint64_t>, BigInt> cache_;
};

// key[0] = carry, key[1] = empty summands, key[2 + i] = summands committed to class i
using DpKey = std::vector<std::uint32_t>;
using DpStates = std::map<DpKey, BigInt>;

}  // namespace

RepCountResult count_reps_digitdp(const BasisSpec& spec, const DigitRep& n, std::size_t h,
                                  bool zero_allowed) {
  if (h < 1) throw DomainError("number of summands must be >= 1");
  spec.seq.validate(n);
  const std::size_t classes = spec.partition.h();

  RepCountResult result;
  result.zero_allowed = zero_allowed;

  DpStates states;
  DpKey init(2 + classes, 0);
  init[1] = static_cast<std::uint32_t>(h);
  states.emplace(init, BigInt(1));

  CompositionCounter compositions;
  std::size_t max_carry = 0;

  auto step = [&](std::size_t j, std::uint64_t x) {
    const std::uint64_t d = spec.seq.quotient(j + 1);
    const ClassIndex c = spec.partition.color(j);
    DpStates next;
    for (const auto& [key, ways] : states) {
      const __int128 cin = key[0];
      const std::uint32_t empty = key[1];
      const std::uint32_t committed = key[2 + c];
      for (std::uint32_t ke = 0; ke <= empty; ++ke) {
        for (std::uint32_t kc = 0; kc <= committed; ++kc) {
          const std::uint32_t k = ke + kc;
          const __int128 lo_num = static_cast<__int128>(k) + cin - x;
          const __int128 hi_num = static_cast<__int128>(k) * (d - 1) + cin - x;
          if (hi_num < 0) continue;
          const __int128 dd = d;
          const __int128 lo = lo_num <= 0 ? 0 : (lo_num + dd - 1) / dd;
          const __int128 hi = hi_num / dd;
          if (lo > hi) continue;
          const BigInt choose = binomial(empty, ke) * binomial(committed, kc);
          for (__int128 cout = lo; cout <= hi; ++cout) {
            const __int128 s = static_cast<__int128>(x) + dd * cout - cin;
            const BigInt& fill = compositions(k, s, d - 1);
            if (sgn(fill) == 0) continue;
            if (cout > static_cast<__int128>(h)) {
              throw std::logic_error("digit DP carry exceeded h");
            }
            max_carry = std::max(max_carry, static_cast<std::size_t>(cout));
            DpKey nk = key;
            nk[0] = static_cast<std::uint32_t>(cout);
            nk[1] = empty - ke;
            nk[2 + c] = committed + ke;
            next[nk] += ways * choose * fill;
          }
        }
      }
    }
    states = std::move(next);
  };

  if (!n.empty()) {
    const std::size_t top = n.max_index();
    for (std::size_t j = 0; j <= top; ++j) step(j, n.digit(j));
    // Carry run-out: a pending carry needs at most ceil(log2 h) + 1 more positions.
    const std::size_t slack = static_cast<std::size_t>(std::bit_width(h - 1)) + 1;
    for (std::size_t j = top + 1; j <= top + slack; ++j) {
      bool pending = std::any_of(states.begin(), states.end(),
                                 [](const auto& kv) { return kv.first[0] > 0; });
      if (!pending) break;
      step(j, 0);
    }
  }

  for (const auto& [key, ways] : states) {
    if (key[0] != 0) continue;
    if (!zero_allowed && key[1] != 0) continue;
    result.ordered_count += ways;
  }
  result.max_carry = max_carry;
  return result;
}

// ---------------------------------------------------------------------------
// Sumset

BitWindow hfold_sumset_window(const BitWindow& members, std::size_t h) {
  if (h < 1) throw DomainError("h-fold sumset needs h >= 1");
  BitWindow current = members;
  const auto member_list = members.to_vector();
  for (std::size_t k = 1; k < h; ++k) {
    BitWindow next(members.max_value());
    auto sums = current.to_vector();
    // Shift whichever operand is denser by the elements of the sparser one.
    if (member_list.size() <= sums.size()) {
      for (auto m : member_list) next.or_shifted(current, m);
    } else {
      for (auto s : sums) next.or_shifted(members, s);
    }
    current = std::move(next);
  }
  return current;
}

// ---------------------------------------------------------------------------
// Prefix inequality

PrefixCheck check_prefix_inequality(const GadicSequence& seq, const DigitRep& canonical,
                                    std::span<const DigitTerm> alternate) {
  seq.validate(canonical);
  BigInt alt_total = 0;
  for (const auto& term : alternate) {
    auto d = seq.quotient(term.index + 1);
    if (term.digit < 1 || term.digit > d - 1) {
      throw PreconditionError("alternate digit " + std::to_string(term.digit) + " at index " +
                              std::to_string(term.index) + " outside [1, " +
                              std::to_string(d - 1) + "]");
    }
    alt_total += seq.value(term.index) * to_big(term.digit);
  }
  if (alt_total != seq.evaluate(canonical)) {
    throw PreconditionError("canonical and alternate decompositions have different totals");
  }

  std::vector<DigitTerm> sorted(alternate.begin(), alternate.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const DigitTerm& a, const DigitTerm& b) { return a.index < b.index; });

  PrefixCheck out;
  out.holds = true;
  BigInt lhs = 0;
  BigInt rhs = 0;
  auto next_alt = sorted.begin();
  std::size_t k = 0;
  for (const auto& [u, x] : canonical.digits()) {
    lhs += seq.value(u) * to_big(x);
    for (; next_alt != sorted.end() && next_alt->index <= u; ++next_alt) {
      rhs += seq.value(next_alt->index) * to_big(next_alt->digit);
    }
    PrefixStep stepk{++k, u, lhs, rhs, lhs <= rhs};
    out.holds = out.holds && stepk.holds;
    out.steps.push_back(std::move(stepk));
  }
  return out;
}

std::vector<DigitTerm> random_downward_split(const GadicSequence& seq, const DigitRep& canonical,
                                             std::mt19937_64& rng, std::size_t splits) {
  std::vector<DigitTerm> terms;
  for (const auto& [j, x] : canonical.digits()) terms.push_back({j, x});
  for (std::size_t s = 0; s < splits && !terms.empty(); ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
    auto idx = pick(rng);
    DigitTerm term = terms[idx];
    const bool can_split = term.digit >= 2;
    const bool can_lower = term.index >= 1;
    if (!can_split && !can_lower) continue;
    bool lower = can_lower && (!can_split || std::bernoulli_distribution(0.5)(rng));
    if (lower) {
      // g_v = g_{v-1} + (d_v - 1) g_{v-1}
      auto d = seq.quotient(term.index);
      if (term.digit == 1) {
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(idx));
      } else {
        terms[idx].digit -= 1;
      }
      terms.push_back({term.index - 1, 1});
      terms.push_back({term.index - 1, d - 1});
    } else {
      std::uniform_int_distribution<std::uint64_t> part(1, term.digit - 1);
      auto y = part(rng);
      terms[idx].digit = y;
      terms.push_back({term.index, term.digit - y});
    }
  }
  std::shuffle(terms.begin(), terms.end(), rng);
  return terms;
}

}  // namespace gadic

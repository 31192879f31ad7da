#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: representations are built top-down from precomputed
// powers, membership by enumerating digit choices over monochromatic index
// sets, and representation counts by polynomial convolution.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Quotients = std::function<std::uint64_t(std::size_t)>;  // i -> d_i, i >= 1
using Colors = std::function<std::uint32_t(std::size_t)>;      // j -> class

inline std::vector<std::uint64_t> scales(const Quotients& d, std::uint64_t limit) {
  std::vector<std::uint64_t> g{1};
  while (g.back() <= limit) g.push_back(g.back() * d(g.size()));
  return g;  // last entry exceeds limit
}

/// Greedy top-down digits of n (n <= ~2^62).
inline std::map<std::size_t, std::uint64_t> greedy_digits(const Quotients& d, std::uint64_t n) {
  auto g = scales(d, n);
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t j = g.size(); j-- > 0;) {
    auto x = n / g[j];
    n -= x * g[j];
    if (x) out[j] = x;
  }
  return out;
}

/// A_G(W) ∩ [1, N] by enumerating every digit choice on each class's indices
/// up to the largest index J with g_J <= N.
inline std::set<std::uint64_t> members_by_digit_choices(const Quotients& d, const Colors& color,
                                                         std::size_t classes, std::uint64_t n_max) {
  auto g = scales(d, n_max);
  const std::size_t top = g.size() - 1;  // indices [0, top)
  std::set<std::uint64_t> out;
  for (std::uint32_t c = 0; c < classes; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < top; ++j) {
      if (color(j) == c) idx.push_back(j);
    }
    std::vector<std::uint64_t> digits(idx.size(), 0);
    while (true) {
      std::uint64_t v = 0;
      for (std::size_t k = 0; k < idx.size(); ++k) v += digits[k] * g[idx[k]];
      if (v >= 1 && v <= n_max) out.insert(v);
      std::size_t k = 0;
      while (k < idx.size() && ++digits[k] == d(idx[k] + 1)) digits[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

/// ways[n] = number of ordered h-tuples from `members` (plus 0 if zero_allowed)
/// summing to n, for n in [0, N], by repeated convolution.
inline std::vector<std::uint64_t> convolution_counts(const std::set<std::uint64_t>& members,
                                                     std::size_t h, bool zero_allowed,
                                                     std::uint64_t n_max) {
  std::vector<std::uint64_t> base(n_max + 1, 0);
  for (auto m : members) {
    if (m <= n_max) base[m] = 1;
  }
  if (zero_allowed) base[0] = 1;
  std::vector<std::uint64_t> ways(n_max + 1, 0);
  ways[0] = 1;
  for (std::size_t k = 0; k < h; ++k) {
    std::vector<std::uint64_t> next(n_max + 1, 0);
    for (std::uint64_t a = 0; a <= n_max; ++a) {
      if (!base[a]) continue;
      for (std::uint64_t s = 0; s + a <= n_max; ++s) next[s + a] += ways[s];
    }
    ways = std::move(next);
  }
  return ways;
}

}  // namespace oracle

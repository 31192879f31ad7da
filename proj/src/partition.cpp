#include "gadic/partition.hpp"

#include <algorithm>
#include <optional>

#include "gadic/errors.hpp"
#include "text_util.hpp"

namespace gadic {

namespace {

std::vector<std::uint64_t> widen(const std::vector<ClassIndex>& xs) {
  return {xs.begin(), xs.end()};
}

std::vector<ClassIndex> narrow(const std::vector<std::uint64_t>& xs) {
  std::vector<ClassIndex> out;
  out.reserve(xs.size());
  for (auto x : xs) {
    if (x > 0xffffffffu) throw ParseError("color out of range: " + std::to_string(x));
    out.push_back(static_cast<ClassIndex>(x));
  }
  return out;
}

std::string format_set(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

}  // namespace

PartitionSpec::PartitionSpec(std::size_t h, std::vector<ClassIndex> prefix,
                             std::vector<ClassIndex> period)
    : h_(h), prefix_(std::move(prefix)), period_(std::move(period)) {
  if (h_ < 2) throw ValidationError("partition needs h >= 2 classes");
  if (period_.empty()) throw ValidationError("color period must be nonempty");
  auto check = [this](ClassIndex c) {
    if (c >= h_) {
      throw ValidationError("color " + std::to_string(c) + " outside [0, " + std::to_string(h_ - 1) +
                            "]");
    }
  };
  std::for_each(prefix_.begin(), prefix_.end(), check);
  std::for_each(period_.begin(), period_.end(), check);
  std::vector<bool> seen(h_, false);
  for (auto c : period_) seen[c] = true;
  for (std::size_t i = 0; i < h_; ++i) {
    if (!seen[i]) {
      throw ValidationError("class " + std::to_string(i) + " does not occur in the color period");
    }
  }
}

std::string PartitionSpec::to_string() const {
  return "h=" + std::to_string(h_) + ";prefix=" + detail::format_list(widen(prefix_)) +
         ";period=" + detail::format_list(widen(period_));
}

PartitionSpec PartitionSpec::parse(std::string_view text) {
  std::size_t h = 0;
  std::vector<ClassIndex> prefix;
  std::vector<ClassIndex> period;
  bool have_h = false;
  bool have_period = false;
  for (auto [key, val] : detail::parse_fields(text)) {
    if (key == "h") {
      h = detail::parse_u64(val);
      have_h = true;
    } else if (key == "prefix") {
      prefix = narrow(detail::parse_list(val));
    } else if (key == "period") {
      period = narrow(detail::parse_list(val));
      have_period = true;
    } else {
      throw ParseError("unknown partition field '" + std::string(key) + "'");
    }
  }
  if (!have_h || !have_period) throw ParseError("partition spec needs h and period");
  return PartitionSpec(h, std::move(prefix), std::move(period));
}

std::size_t min_t(std::size_t h) {
  if (h < 2) throw DomainError("min_t requires h >= 2");
  std::size_t t = 1;
  // 2^{t-1} >= h
  while ((std::size_t{1} << (t - 1)) < h) ++t;
  return t;
}

bool IntervalFamilies::contains(ClassIndex i, std::size_t m) const {
  const auto& fam = families.at(i);
  if (m < periodic_start) {
    return std::binary_search(fam.prefix_members.begin(), fam.prefix_members.end(), m);
  }
  return std::binary_search(fam.residues.begin(), fam.residues.end(), m % modulus);
}

std::size_t IntervalFamilies::nth_member(ClassIndex i, std::size_t lower) const {
  return nth_member(i, lower, 0);
}

std::size_t IntervalFamilies::nth_member(ClassIndex i, std::size_t lower, std::size_t k) const {
  const auto& fam = families.at(i);
  if (!fam.infinite()) {
    throw HypothesisError("interval family for class " + std::to_string(i) + " with t=" +
                          std::to_string(t) + " is empty");
  }
  for (auto m : fam.prefix_members) {
    if (m >= lower) {
      if (k == 0) return m;
      --k;
    }
  }
  // Walk residue blocks starting at the first block that can hold a member >= lower.
  std::size_t base = std::max(lower, periodic_start);
  std::size_t block = base - base % modulus;
  while (true) {
    for (auto r : fam.residues) {
      auto m = block + r;
      if (m < base) continue;
      if (k == 0) return m;
      --k;
    }
    block += modulus;
  }
}

bool IntervalFamilies::all_infinite() const {
  return std::all_of(families.begin(), families.end(),
                     [](const IntervalFamily& f) { return f.infinite(); });
}

std::string IntervalFamilies::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < families.size(); ++i) {
    out += "class=" + std::to_string(i) + ": residues " + format_set(families[i].residues) +
           " mod " + std::to_string(modulus) + "; prefix-members [";
    for (std::size_t k = 0; k < families[i].prefix_members.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(families[i].prefix_members[k]);
    }
    out += "]\n";
  }
  return out;
}

IntervalFamilies detect_interval_families(const PartitionSpec& spec, std::size_t t) {
  if (t < 1) throw DomainError("interval length t must be >= 1");
  IntervalFamilies out;
  out.t = t;
  out.modulus = spec.period().size();
  // Once M - t + 1 >= |prefix| the window lies in the periodic part.
  out.periodic_start = std::max<std::size_t>(spec.prefix().size() + t - 1, 1);
  out.families.resize(spec.h());

  auto window_color = [&](std::size_t m) -> std::optional<ClassIndex> {
    auto c = spec.color(m);
    for (std::size_t j = m + 1 - t; j < m; ++j) {
      if (spec.color(j) != c) return std::nullopt;
    }
    return c;
  };

  for (std::size_t m = std::max<std::size_t>(t - 1, 1); m < out.periodic_start; ++m) {
    if (auto c = window_color(m)) out.families[*c].prefix_members.push_back(m);
  }
  for (std::size_t m = out.periodic_start; m < out.periodic_start + out.modulus; ++m) {
    if (auto c = window_color(m)) out.families[*c].residues.push_back(m % out.modulus);
  }
  for (auto& fam : out.families) std::sort(fam.residues.begin(), fam.residues.end());
  return out;
}

}  // namespace gadic

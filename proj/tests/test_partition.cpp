#include <gtest/gtest.h>

#include "gadic/errors.hpp"
#include "gadic/partition.hpp"

using namespace gadic;

namespace {

PartitionSpec p0011() { return PartitionSpec(2, {}, {0, 0, 1, 1}); }

bool window_monochromatic(const PartitionSpec& spec, std::size_t m, std::size_t t, ClassIndex c) {
  if (m + 1 < t) return false;
  for (std::size_t j = m + 1 - t; j <= m; ++j) {
    if (spec.color(j) != c) return false;
  }
  return true;
}

}  // namespace

TEST(PartitionSpec, Validation) {
  EXPECT_THROW(PartitionSpec(1, {}, {0}), ValidationError);
  EXPECT_THROW(PartitionSpec(2, {}, {}), ValidationError);
  EXPECT_THROW(PartitionSpec(2, {}, {0, 2}), ValidationError);
  EXPECT_THROW(PartitionSpec(2, {3}, {0, 1}), ValidationError);
  // class 1 only in the prefix: W_1 would be finite
  EXPECT_THROW(PartitionSpec(2, {1}, {0}), ValidationError);
}

TEST(PartitionSpec, Color) {
  EXPECT_EQ(p0011().color(6), 1u);
  EXPECT_EQ(p0011().color(5), 0u);
  EXPECT_EQ(p0011().color(4), 0u);
  EXPECT_EQ(PartitionSpec(3, {}, {0, 1, 2}).color(7), 1u);
  auto with_prefix = PartitionSpec(2, {1, 1, 1}, {0, 1});
  EXPECT_EQ(with_prefix.color(0), 1u);
  EXPECT_EQ(with_prefix.color(3), 0u);
  EXPECT_EQ(with_prefix.color(4), 1u);
}

TEST(PartitionSpec, CoveringAndDisjointness) {
  // A total coloring puts each index in exactly one class; check counts per window.
  for (const auto& spec : {p0011(), PartitionSpec(3, {2, 2}, {0, 1, 2, 1}),
                           PartitionSpec(4, {}, {3, 2, 1, 0, 0})}) {
    std::vector<std::size_t> counts(spec.h(), 0);
    for (std::size_t j = 0; j <= 100'000; ++j) {
      auto c = spec.color(j);
      ASSERT_LT(c, spec.h());
      ++counts[c];
    }
    std::size_t total = 0;
    for (auto c : counts) {
      EXPECT_GT(c, 0u);
      total += c;
    }
    EXPECT_EQ(total, 100'001u);
  }
}

TEST(PartitionSpec, TextForm) {
  EXPECT_EQ(p0011().to_string(), "h=2;prefix=[];period=[0,0,1,1]");
  EXPECT_EQ(PartitionSpec::parse("h=2;prefix=[];period=[0,0,1,1]"), p0011());
  auto spec = PartitionSpec(3, {2, 0}, {0, 1, 2});
  EXPECT_EQ(PartitionSpec::parse(spec.to_string()), spec);
  EXPECT_THROW(PartitionSpec::parse("prefix=[];period=[0,1]"), ParseError);
  EXPECT_THROW(PartitionSpec::parse("h=2;period=[0,1];bogus=1"), ParseError);
  EXPECT_THROW(PartitionSpec::parse("h=2;period=[0,5]"), ValidationError);
}

TEST(MinT, Values) {
  EXPECT_EQ(min_t(2), 2u);
  EXPECT_EQ(min_t(3), 3u);
  EXPECT_EQ(min_t(4), 3u);
  EXPECT_EQ(min_t(5), 4u);
  EXPECT_EQ(min_t(8), 4u);
  EXPECT_EQ(min_t(9), 5u);
  EXPECT_THROW(min_t(1), DomainError);
}

TEST(MinT, MonotoneAndTight) {
  std::size_t prev = 0;
  for (std::size_t h = 2; h <= 5000; ++h) {
    auto t = min_t(h);
    EXPECT_GE(t, prev);
    prev = t;
    EXPECT_GE(std::size_t{1} << (t - 1), h);
    EXPECT_LT(std::size_t{1} << (t - 2), h);
  }
}

TEST(IntervalFamilies, Detection) {
  auto fam = detect_interval_families(p0011(), 2);
  EXPECT_EQ(fam.modulus, 4u);
  EXPECT_EQ(fam.families[0].residues, (std::vector<std::size_t>{1}));
  EXPECT_EQ(fam.families[1].residues, (std::vector<std::size_t>{3}));
  EXPECT_TRUE(fam.families[0].prefix_members.empty());

  auto alternating = detect_interval_families(PartitionSpec(2, {}, {0, 1}), 2);
  EXPECT_FALSE(alternating.families[0].infinite());
  EXPECT_FALSE(alternating.families[1].infinite());
  EXPECT_FALSE(alternating.all_infinite());

  auto runs = detect_interval_families(PartitionSpec(2, {}, {0, 0, 0, 1, 1, 1}), 3);
  EXPECT_EQ(runs.families[0].residues, (std::vector<std::size_t>{2}));
  EXPECT_EQ(runs.families[1].residues, (std::vector<std::size_t>{5}));
  EXPECT_EQ(runs.modulus, 6u);
}

TEST(IntervalFamilies, Serialization) {
  EXPECT_EQ(detect_interval_families(p0011(), 2).to_string(),
            "class=0: residues {1} mod 4; prefix-members []\n"
            "class=1: residues {3} mod 4; prefix-members []\n");
}

TEST(IntervalFamilies, NthMember) {
  auto fam = detect_interval_families(p0011(), 2);
  EXPECT_EQ(fam.nth_member(1, 2), 3u);
  EXPECT_EQ(fam.nth_member(1, 4), 7u);
  EXPECT_EQ(fam.nth_member(0, 0), 1u);
  EXPECT_EQ(fam.nth_member(1, 2, 1), 7u);
  EXPECT_EQ(fam.nth_member(1, 2, 2), 11u);

  auto alternating = detect_interval_families(PartitionSpec(2, {}, {0, 1}), 2);
  EXPECT_THROW(alternating.nth_member(0, 0), HypothesisError);
}

TEST(IntervalFamilies, PrefixMembers) {
  // prefix [1,1,1,1] then alternating: class 1 has exceptional windows only in the prefix
  auto spec = PartitionSpec(2, {1, 1, 1, 1}, {0, 0, 1, 1});
  auto fam = detect_interval_families(spec, 3);
  EXPECT_EQ(fam.periodic_start, 6u);
  EXPECT_EQ(fam.families[1].prefix_members, (std::vector<std::size_t>{2, 3}));
  EXPECT_FALSE(fam.families[0].infinite());
  EXPECT_FALSE(fam.families[1].infinite());
  EXPECT_EQ(fam.to_string(),
            "class=0: residues {} mod 4; prefix-members []\n"
            "class=1: residues {} mod 4; prefix-members [2,3]\n");
}

// Each reported member has a monochromatic window, and every M <= 10^4 with a
// monochromatic window is reported.
TEST(IntervalFamilies, SoundAndComplete) {
  std::vector<PartitionSpec> specs{p0011(), PartitionSpec(2, {}, {0, 1}),
                                   PartitionSpec(3, {}, {0, 0, 0, 1, 1, 1, 2, 2, 2}),
                                   PartitionSpec(2, {1, 1, 1, 0}, {0, 1, 1, 0, 0, 0, 1}),
                                   PartitionSpec(3, {0, 0, 0, 0, 0}, {2, 2, 1, 0, 1, 1, 1, 2})};
  for (const auto& spec : specs) {
    for (std::size_t t = 1; t <= 5; ++t) {
      auto fam = detect_interval_families(spec, t);
      for (ClassIndex c = 0; c < spec.h(); ++c) {
        for (std::size_t m = 1; m <= 10'000; ++m) {
          ASSERT_EQ(fam.contains(c, m), window_monochromatic(spec, m, t, c))
              << spec.to_string() << " t=" << t << " class=" << c << " M=" << m;
        }
        if (fam.families[c].infinite()) {
          for (std::size_t lower : {0u, 1u, 17u, 1000u}) {
            auto m = fam.nth_member(c, lower);
            EXPECT_GE(m, lower);
            EXPECT_TRUE(window_monochromatic(spec, m, t, c));
            for (std::size_t k = lower; k < m; ++k) EXPECT_FALSE(fam.contains(c, k));
          }
        }
      }
    }
  }
}

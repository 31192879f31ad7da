#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "gadic/errors.hpp"
#include "gadic/verifier.hpp"

using namespace gadic;

namespace {

BasisSpec binary_h2() {
  return {GadicSequence::constant(2), PartitionSpec(2, {}, {0, 0, 1, 1})};
}

BasisSpec runs3(std::size_t h) {
  std::vector<ClassIndex> period;
  for (ClassIndex c = 0; c < h; ++c) period.insert(period.end(), 3, c);
  return {GadicSequence::constant(2), PartitionSpec(h, {}, period)};
}

}  // namespace

TEST(Witness, HandCheckableCases) {
  auto spec = binary_h2();
  auto c1 = construct_witness(spec, 2, BigInt(1));
  EXPECT_EQ(c1.m0, 0u);
  ASSERT_EQ(c1.m_choices.size(), 1u);
  EXPECT_EQ(c1.m_choices[0], (std::pair<ClassIndex, std::size_t>{1, 3}));
  ASSERT_EQ(c1.summands.size(), 2u);
  EXPECT_EQ(c1.summands[1].value, 8);
  EXPECT_EQ(c1.n_value, 9);

  auto c3 = construct_witness(spec, 2, BigInt(3));
  EXPECT_EQ(c3.m0, 1u);
  EXPECT_EQ(c3.summands[1].value, 8);
  EXPECT_EQ(c3.n_value, 11);

  auto c4 = construct_witness(spec, 2, BigInt(4));
  EXPECT_EQ(c4.a_class, 1u);
  EXPECT_EQ(c4.m0, 2u);
  EXPECT_EQ(c4.m_choices[0], (std::pair<ClassIndex, std::size_t>{0, 5}));
  EXPECT_EQ(c4.summands[1].value, 35);
  EXPECT_EQ(c4.n_value, 39);
}

TEST(Witness, Errors) {
  auto spec = binary_h2();
  EXPECT_THROW(construct_witness(spec, 2, BigInt(5)), DomainError);  // 5 = 1 + 4 mixes classes
  EXPECT_THROW(construct_witness(spec, 1, BigInt(1)), HypothesisError);
  EXPECT_NO_THROW(construct_witness(spec, 1, BigInt(1), 0, true));
  // alternating colors have no monochromatic window of length 2
  BasisSpec alt{GadicSequence::constant(2), PartitionSpec(2, {}, {0, 1})};
  EXPECT_THROW(construct_witness(alt, 2, BigInt(1)), HypothesisError);
}

TEST(Witness, VerifyVerdicts) {
  auto spec = binary_h2();
  auto window = enumerate(spec, 200);
  for (int a : {1, 3, 4}) {
    auto cert = verify_witness(spec, construct_witness(spec, 2, BigInt(a)), &window);
    EXPECT_EQ(cert.verdict, Verdict::certified) << a;
    EXPECT_EQ(cert.measured_count, 2);
    EXPECT_EQ(cert.expected_count, 2);
    ASSERT_TRUE(cert.bruteforce_count.has_value());
    EXPECT_EQ(*cert.bruteforce_count, 2);
    EXPECT_EQ(*cert.bruteforce_without_a, 0);
    EXPECT_TRUE(*cert.bruteforce_tuples_match);
  }
  // a tampered certificate (n replaced by 10 = 2 + 8 = 8 + 2) is refuted since a = 1 is absent
  auto bad = construct_witness(spec, 2, BigInt(1));
  bad.n = spec.seq.represent(BigInt(10));
  bad.n_value = 10;
  bad.summands[0].value = 2;
  bad.summands[0].digits = spec.seq.represent(BigInt(2));
  EXPECT_EQ(verify_witness(spec, bad).verdict, Verdict::refuted);
}

TEST(Witness, PermutationCount) {
  std::vector<BigInt> twin{BigInt(5), BigInt(5)};
  EXPECT_EQ(permutation_count(twin), 1);
  std::vector<BigInt> three{BigInt(1), BigInt(2), BigInt(2)};
  EXPECT_EQ(permutation_count(three), 3);
  std::vector<BigInt> distinct{BigInt(1), BigInt(2), BigInt(3), BigInt(4)};
  EXPECT_EQ(permutation_count(distinct), 24);
}

TEST(Witness, ChoicesIncreaseN) {
  auto spec = binary_h2();
  BigInt prev = 0;
  for (std::size_t w = 0; w < 6; ++w) {
    auto cert = construct_witness(spec, 2, BigInt(3), w);
    EXPECT_GT(cert.n_value, prev);
    prev = cert.n_value;
    EXPECT_EQ(spec.seq.evaluate(cert.n), cert.n_value);
  }
}

TEST(Witness, CertificateText) {
  auto spec = binary_h2();
  auto cert = verify_witness(spec, construct_witness(spec, 2, BigInt(1)));
  EXPECT_EQ(cert.file_name(), "cert_1_3.txt");
  auto text = cert.to_text();
  EXPECT_NE(text.find("verdict: certified"), std::string::npos);
  EXPECT_NE(text.find("n_value: 9"), std::string::npos);
  EXPECT_EQ(text, verify_witness(spec, construct_witness(spec, 2, BigInt(1))).to_text());
}

TEST(Minimality, BinaryH2Batch) {
  auto batch = verify_minimality(binary_h2(), 2, 20, 3);
  EXPECT_TRUE(batch.gate.pass);
  EXPECT_EQ(batch.certificates.size(), 60u);
  EXPECT_EQ(batch.certified, 60u);
  EXPECT_TRUE(batch.pass);
  std::size_t crosschecked = 0;
  for (const auto& c : batch.certificates) {
    EXPECT_EQ(binary_h2().seq.evaluate(c.n), c.n_value);
    if (c.bruteforce_count) {
      ++crosschecked;
      EXPECT_EQ(*c.bruteforce_without_a, 0);
      EXPECT_TRUE(*c.bruteforce_tuples_match);
    }
  }
  EXPECT_GT(crosschecked, 0u);
}

TEST(Minimality, ThreadedMatchesSerial) {
  MinimalityOptions par;
  par.threads = 3;
  auto a = verify_minimality(binary_h2(), 2, 8, 2);
  auto b = verify_minimality(binary_h2(), 2, 8, 2, par);
  ASSERT_EQ(a.certificates.size(), b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    EXPECT_EQ(a.certificates[i].to_text(), b.certificates[i].to_text());
  }
}

TEST(Minimality, HigherH) {
  for (std::size_t h : {3u, 4u}) {
    auto batch = verify_minimality(runs3(h), 3, 5, 2);
    EXPECT_EQ(batch.certified, 10u) << h;
    EXPECT_TRUE(batch.pass) << h;
  }
}

TEST(Minimality, HypothesisErrors) {
  EXPECT_THROW(verify_minimality(binary_h2(), 1, 3, 1), HypothesisError);
  EXPECT_THROW(verify_minimality(runs3(4), 2, 3, 1), HypothesisError);
  BasisSpec alt{GadicSequence::constant(2), PartitionSpec(2, {}, {0, 1})};
  MinimalityOptions o;
  o.override_threshold = true;
  EXPECT_THROW(verify_minimality(alt, 2, 3, 1, o), HypothesisError);
}

TEST(Minimality, FirstMembers) {
  auto m = first_members(binary_h2(), 8);
  std::vector<BigInt> expect{1, 2, 3, 4, 8, 12, 16, 17};
  EXPECT_EQ(m, expect);
}

TEST(Theorems, Reports) {
  for (const auto& spec : {binary_h2(), runs3(3)}) {
    auto r1 = verify_theorem1(spec, 3000);
    EXPECT_TRUE(r1.pass);
    EXPECT_EQ(r1.gaps, r1.expected_gaps);
    EXPECT_EQ(r1.gaps.size(), spec.h());
    auto r2 = verify_theorem2(spec, 3000);
    EXPECT_TRUE(r2.pass);
    EXPECT_TRUE(r2.with_zero.gaps.empty());
    EXPECT_EQ(r2.without_zero.gaps, r1.gaps);
  }
  auto tiny = verify_theorem1(binary_h2(), 0);
  EXPECT_TRUE(tiny.pass);
  EXPECT_EQ(tiny.gaps, (std::vector<std::uint64_t>{0}));
}

TEST(Properties, Suites) {
  auto r1 = run_leading_index_suite(GadicSequence({}, {2, 3}), 2000, 7);
  EXPECT_TRUE(r1.pass) << r1.counterexample;
  EXPECT_GE(r1.cases, 2000u);
  auto r2 = run_prefix_inequality_suite(GadicSequence({3}, {2, 5}), 2000, 7);
  EXPECT_TRUE(r2.pass) << r2.counterexample;
  EXPECT_EQ(r2.cases, 2000u);
}

TEST(Explore, RemovabilityRows) {
  auto scan = removability_scan(binary_h2(), 2000, 4);
  EXPECT_EQ(scan.baseline.misses, 0u);
  ASSERT_GE(scan.rows.size(), 2u);
  EXPECT_EQ(scan.rows[0].removed, 0u);
  EXPECT_EQ(scan.rows[1].removed, 1u);
  // without 0: exactly 0 and 1 are missed
  EXPECT_EQ(scan.rows[0].misses, 2u);
  EXPECT_EQ(scan.rows[0].threshold, 2u);
  EXPECT_TRUE(scan.rows[0].tail_covered);
  // without 1: the witnesses 9, 9 + 2^4k, ... keep missing
  EXPECT_FALSE(scan.rows[1].tail_covered);
}

TEST(Explore, Sweep) {
  BasisSpec alt{GadicSequence::constant(2), PartitionSpec(2, {}, {0, 1})};
  std::vector<std::size_t> ts{1, 2};
  auto rows = sweep_t(alt, ts, 5, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].below_threshold);
  EXPECT_TRUE(rows[0].families_infinite);
  EXPECT_EQ(rows[1].status, "hypothesis-violated");
  auto good = sweep_t(binary_h2(), std::vector<std::size_t>{2}, 5, 2);
  EXPECT_EQ(good[0].status, "all-certified");
  EXPECT_EQ(good[0].certified, 10u);
}

TEST(ConfigHash, Stable) {
  EXPECT_EQ(config_hash(""), 0xcbf29ce484222325ull);
  EXPECT_NE(config_hash(binary_h2().to_string()), config_hash(runs3(3).to_string()));
}

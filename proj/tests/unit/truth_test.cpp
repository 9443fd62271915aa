// Copyright 2026 The narsrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "narsrel/truth.hpp"

namespace narsrel {
namespace {

constexpr double kEps = 1e-12;

TruthValue random_truth(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> f(0.0, 1.0);
  std::uniform_real_distribution<double> c(0.0, 0.999);
  return {f(rng), c(rng)};
}

TEST(Evidence, ClosedForms) {
  EXPECT_DOUBLE_EQ(w2c(0.0), 0.0);
  EXPECT_DOUBLE_EQ(w2c(1.0), 0.5);
  EXPECT_NEAR(c2w(w2c(3.0)), 3.0, kEps);
  EXPECT_THROW(w2c(-0.1), std::domain_error);
  EXPECT_THROW(c2w(1.0), std::domain_error);
  EXPECT_THROW(c2w(-0.5), std::domain_error);
}

TEST(Evidence, InversePairOverRange) {
  for (double w = 0.0; w < 1000.0; w = w * 1.7 + 0.013) {
    EXPECT_NEAR(c2w(w2c(w)), w, kEps * std::max(1.0, w)) << w;
  }
  for (double c = 0.0; c < 0.999; c += 0.0137) {
    EXPECT_NEAR(w2c(c2w(c)), c, kEps) << c;
  }
}

TEST(Revise, Examples) {
  const TruthValue a = revise({1.0, 0.5}, {1.0, 0.5});
  EXPECT_NEAR(a.frequency, 1.0, kEps);
  EXPECT_NEAR(a.confidence, 2.0 / 3.0, kEps);
  const TruthValue b = revise({1.0, 0.5}, {0.0, 0.5});
  EXPECT_NEAR(b.frequency, 0.5, kEps);
  EXPECT_NEAR(b.confidence, 2.0 / 3.0, kEps);
}

TEST(Revise, CommutativeMonotoneInRange) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20000; ++i) {
    const TruthValue a = random_truth(rng);
    const TruthValue b = random_truth(rng);
    const TruthValue ab = revise(a, b);
    const TruthValue ba = revise(b, a);
    ASSERT_NEAR(ab.frequency, ba.frequency, kEps);
    ASSERT_NEAR(ab.confidence, ba.confidence, kEps);
    ASSERT_TRUE(ab.in_range());
    ASSERT_GE(ab.confidence, std::max(a.confidence, b.confidence) - kEps);
    if (a.confidence > 0 && b.confidence > 0) {
      ASSERT_GT(ab.confidence, std::max(a.confidence, b.confidence));
    }
  }
}

TEST(Revise, PositiveEvidenceApproachesButNeverReachesOne) {
  TruthValue t = induction_evidence(true);
  double last = t.confidence;
  for (int i = 0; i < 10000; ++i) {
    t = revise(t, induction_evidence(true));
    ASSERT_GT(t.confidence, last);
    ASSERT_LT(t.confidence, 1.0);
    last = t.confidence;
  }
}

TEST(Deduction, Examples) {
  const TruthValue d = deduction({1.0, 0.9}, {1.0, 0.9});
  EXPECT_NEAR(d.frequency, 1.0, kEps);
  EXPECT_NEAR(d.confidence, 0.81, kEps);
  const TruthValue z = deduction({0.7, 0.8}, {0.0, 0.9});
  EXPECT_EQ(z.frequency, 0.0);
  EXPECT_EQ(z.confidence, 0.0);
}

TEST(Deduction, MonotoneInPremiseConfidenceAndInRange) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20000; ++i) {
    const TruthValue a = random_truth(rng);
    const TruthValue r = random_truth(rng);
    TruthValue a2 = a;
    a2.confidence = std::min(0.999, a.confidence + 0.1);
    ASSERT_TRUE(deduction(a, r).in_range());
    ASSERT_TRUE(intersection(a, r).in_range());
    ASSERT_GE(deduction(a2, r).confidence, deduction(a, r).confidence);
  }
}

TEST(InductionEvidence, SingleObservation) {
  EXPECT_EQ(induction_evidence(true), (TruthValue{1.0, 0.5}));
  EXPECT_EQ(induction_evidence(false), (TruthValue{0.0, 0.5}));
  const TruthValue two = revise(induction_evidence(true), induction_evidence(true));
  EXPECT_NEAR(two.confidence, 2.0 / 3.0, kEps);
}

TEST(Expectation, ClosedForms) {
  EXPECT_DOUBLE_EQ(expectation({0.3, 0.0}), 0.5);
  EXPECT_NEAR(expectation({1.0, 0.9}), 0.95, kEps);
  EXPECT_NEAR(expectation({0.0, 0.9}), 0.05, kEps);
}

TEST(FormatTruth, TwoDecimals) {
  EXPECT_EQ(format_truth({1.0, 2.0 / 3.0}), "{1.00 0.67}");
}

TEST(Stamp, OverlapAndMerge) {
  const Stamp a(1, 0);
  const Stamp b(2, 0);
  EXPECT_FALSE(a.overlaps(b));
  const Stamp ab = Stamp::merge(a, b, 5);
  EXPECT_TRUE(ab.overlaps(a));
  EXPECT_TRUE(ab.contains(2));
  EXPECT_EQ(ab.creation_time(), 5u);
}

TEST(Stamp, CapEvictsOldest) {
  Stamp s(0, 0, 4);
  for (EvidenceId id = 1; id < 10; ++id) s.add(id);
  ASSERT_EQ(s.ids().size(), 4u);
  EXPECT_FALSE(s.contains(5));
  EXPECT_TRUE(s.contains(6));
  EXPECT_TRUE(s.contains(9));
}

}  // namespace
}  // namespace narsrel

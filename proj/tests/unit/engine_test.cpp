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

#include <gtest/gtest.h>

#include "common/listings.hpp"
#include "narsrel/engine.hpp"

namespace narsrel {
namespace {

struct Driver {
  Engine engine;
  Tick now = 0;

  explicit Driver(std::uint64_t seed = 0) : engine(EngineConfig{}, seed) {}

  Decision trial(std::string_view cue, std::string_view sample,
                 std::string_view left, std::string_view right) {
    const std::string lines[] = {
        "<(rel * " + std::string(cue) + ") --> (loc * ocr)>. :|:",
        "<(sample * " + std::string(sample) + ") --> (loc * ocr)>. :|:",
        "<(left * " + std::string(left) + ") --> (loc * ocr)>. :|:",
        "<(right * " + std::string(right) + ") --> (loc * ocr)>. :|:"};
    for (const auto& l : lines) engine.ingest(parse_sentence(l), ++now);
    auto d = engine.ingest(parse_sentence("G! :|:"), ++now);
    return *d;
  }

  // Runs the trial, forcing `side`, and delivers `outcome`.
  void train(std::string_view cue, std::string_view sample,
             std::string_view left, std::string_view right, Side side,
             Outcome outcome = Outcome::kReinforced) {
    engine.force_next_action(side);
    trial(cue, sample, left, right);
    engine.process_feedback(outcome, ++now);
  }
};

const Term& contingency_term() {
  static const Term t = [] {
    std::string s = normalize_whitespace(testing::kContingencyListing);
    s.pop_back();
    return parse_term(s);
  }();
  return t;
}

TEST(Ingest, TrialFillsBufferAndDecidesOnce) {
  Engine e;
  Tick now = 0;
  std::optional<Decision> last;
  int decisions = 0;
  for (const SentenceNode& s : parse_lines(testing::kTrialListing)) {
    last = e.ingest(s, ++now);
    decisions += last.has_value();
  }
  EXPECT_EQ(e.buffer().size(), 4u);
  EXPECT_EQ(decisions, 1);
  EXPECT_EQ(e.decisions(), 1u);
  ASSERT_TRUE(last.has_value());
  EXPECT_TRUE(last->babbled);
}

TEST(Ingest, EternalRevisionAndOverlap) {
  Engine e;
  const Term t = parse_term("<(X1 * Y1) --> SAME>");
  EXPECT_EQ(e.ingest_belief(t, {1.0, 0.5}, Stamp(100, 0), 1), RevisionResult::kCreated);
  EXPECT_EQ(e.ingest_belief(t, {1.0, 0.5}, Stamp(101, 0), 2), RevisionResult::kRevised);
  const TruthValue before = e.memory().find(t)->truth;
  EXPECT_NEAR(before.confidence, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(e.ingest_belief(t, {0.0, 0.9}, Stamp(100, 0), 3), RevisionResult::kOverlap);
  EXPECT_EQ(e.memory().find(t)->truth, before);
}

TEST(Ingest, BufferOverflowEvictsOldest) {
  Engine e;
  for (Tick i = 1; i <= 9; ++i) {
    e.ingest(parse_sentence("<(sample * X" + std::to_string(i) + ") --> (loc * ocr)>. :|:"), i);
  }
  EXPECT_EQ(e.buffer().size(), 8u);
  EXPECT_TRUE(e.trace().contains("evict | <(sample * X1) --> (loc * ocr)>. :|:"));
}

TEST(Decide, IncompleteTrial) {
  Engine e;
  e.ingest(parse_sentence("<(rel * SAME) --> (loc * ocr)>. :|:"), 1);
  EXPECT_THROW(e.ingest(parse_sentence("G! :|:"), 2), IncompleteTrial);
}

TEST(Decide, UntrainedBabblingIsUniform) {
  int left = 0;
  const int n = 1000;
  for (int seed = 0; seed < n; ++seed) {
    Driver d(static_cast<std::uint64_t>(seed));
    const Decision dec = d.trial("SAME", "X1", "Y1", "Y2");
    ASSERT_TRUE(dec.babbled);
    left += dec.action.side == Side::kLeft;
  }
  const double expected = n / 2.0;
  const double chi2 = 2 * (left - expected) * (left - expected) / expected;
  EXPECT_LT(chi2, 3.841) << left << " left of " << n;  // df = 1, alpha = 0.05
}

TEST(Decide, DeterministicGivenSeed) {
  Driver a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(a.trial("SAME", "X1", "Y1", "Y2").action,
              b.trial("SAME", "X1", "Y1", "Y2").action);
    a.engine.process_feedback(Outcome::kNoFeedback, ++a.now);
    b.engine.process_feedback(Outcome::kNoFeedback, ++b.now);
  }
  EXPECT_EQ(a.engine.trace().str(), b.engine.trace().str());
}

TEST(Decide, ExploitsAfterAbTraining) {
  Driver d(3);
  for (int i = 0; i < 2; ++i) {
    d.train("SAME", "A1", "B1", "B2", Side::kLeft);
    d.train("SAME", "A1", "B2", "B1", Side::kRight);
    d.train("OPPOSITE", "A1", "B1", "B2", Side::kRight);
    d.train("OPPOSITE", "A1", "B2", "B1", Side::kLeft);
  }
  const Decision dec = d.trial("SAME", "A1", "B1", "B2");
  EXPECT_FALSE(dec.babbled);
  EXPECT_EQ(dec.action.side, Side::kLeft);
  EXPECT_GT(dec.evaluations[0].expectation, 0.5);
}

TEST(ProcessFeedback, RequiresPendingAction) {
  Engine e;
  EXPECT_THROW(e.process_feedback(Outcome::kReinforced, 1), NoPendingAction);
  Driver d;
  d.train("SAME", "X1", "Y1", "Y2", Side::kLeft);
  EXPECT_THROW(d.engine.process_feedback(Outcome::kReinforced, 99), NoPendingAction);
}

TEST(ProcessFeedback, ContingencyCreatedThenRevised) {
  Driver d;
  d.train("SAME", "X1", "Y1", "Y2", Side::kLeft);
  const Belief* b = d.engine.memory().find(contingency_term());
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->truth, (TruthValue{1.0, 0.5}));
  d.train("SAME", "X1", "Y1", "Y2", Side::kLeft);
  EXPECT_NEAR(d.engine.memory().find(contingency_term())->truth.confidence,
              2.0 / 3.0, 1e-12);
}

TEST(ProcessFeedback, NotReinforcedLowersExpectation) {
  Driver d;
  d.train("SAME", "X1", "Y1", "Y2", Side::kLeft, Outcome::kNotReinforced);
  const Belief* b = d.engine.memory().find(contingency_term());
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->truth.frequency, 0.0);
  const TrialEvents t{Term::atom("SAME"), Term::atom("X1"), Term::atom("Y1"),
                      Term::atom("Y2")};
  EXPECT_LT(d.engine.evaluate(t)[0].expectation, 0.5);
  // Nothing beyond the contingency is learned from a failure.
  EXPECT_TRUE(named_relations(d.engine.memory()).empty());
}

TEST(ProcessFeedback, NoFeedbackLearnsNothing) {
  Driver d;
  d.train("SAME", "X1", "Y1", "Y2", Side::kLeft, Outcome::kNoFeedback);
  EXPECT_EQ(d.engine.memory().size(), 0u);
  EXPECT_EQ(d.engine.feedback_processed(), 0u);
}

TEST(Trace, LineFormat) {
  Driver d;
  d.train("SAME", "X1", "Y1", "Y2", Side::kLeft);
  const auto& lines = d.engine.trace().lines();
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.front(), "1 | event | <(rel * SAME) --> (loc * ocr)>. :|: | -");
  EXPECT_TRUE(d.engine.trace().contains(
      "| contingency | " + normalize_whitespace(testing::kContingencyListing) +
      " | {1.00 0.50}"));
}

}  // namespace
}  // namespace narsrel

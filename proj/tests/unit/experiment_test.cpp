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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "narsrel/experiment.hpp"

namespace narsrel {
namespace {

namespace fs = std::filesystem;

const RunResult& reference_run() {
  static const RunResult r = [] {
    RunConfig cfg;
    cfg.trace = true;
    return run_experiment(cfg);
  }();
  return r;
}

TEST(RunExperiment, DefaultProtocolShape) {
  const RunResult& r = reference_run();
  ASSERT_EQ(r.metrics.size(), 28u);
  EXPECT_EQ(r.trials.size(), 28u * 16u);
  const std::string csv = metrics_csv(r.metrics);
  EXPECT_TRUE(csv.starts_with(std::string(kMetricsHeader) + "\n"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 29);
  EXPECT_NE(csv.find("\nXY,1,"), std::string::npos);
  EXPECT_NE(csv.find("\nBC,4,"), std::string::npos);
}

TEST(RunExperiment, ReferenceSeedPassesDerivedTest) {
  const RunResult& r = reference_run();
  for (const BlockMetrics& m : r.metrics) {
    if (m.phase_id == PhaseId::kBC) EXPECT_EQ(m.accuracy, 1.0) << m.block_idx;
    EXPECT_EQ(m.accuracy, static_cast<double>(m.correct) / m.trials);
  }
  EXPECT_EQ(r.phases.back().phase_id, PhaseId::kBC);
  EXPECT_EQ(r.phases.back().feedback_processed, 0u);
}

TEST(RunExperiment, MutualConfidenceNonDecreasingInPretraining) {
  double last = 0.0;
  for (const BlockMetrics& m : reference_run().metrics) {
    if (!is_pretraining(m.phase_id)) break;
    EXPECT_GE(m.mean_conf_mutual, last);
    last = m.mean_conf_mutual;
  }
}

TEST(RunExperiment, BabblingNonIncreasingWithinTrainingPhases) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RunConfig cfg;
    cfg.seed = seed;
    const RunResult r = run_experiment(cfg);
    for (std::size_t i = 1; i < r.metrics.size(); ++i) {
      const BlockMetrics& a = r.metrics[i - 1];
      const BlockMetrics& b = r.metrics[i];
      if (a.phase_id != b.phase_id) continue;
      if (b.phase_id != PhaseId::kAB && b.phase_id != PhaseId::kAC) continue;
      EXPECT_LE(b.babbles, a.babbles) << "seed " << seed << " "
                                      << phase_name(b.phase_id);
    }
  }
}

// After phases 1-2, derivation agrees with the network oracle on every
// connected pair of the main network at distance <= 2.
TEST(RunExperiment, DerivationAgreesWithOracle) {
  const RunResult& r = reference_run();
  const PhaseSummary* after_ac = nullptr;
  for (const auto& p : r.phases) {
    if (p.phase_id == PhaseId::kAC) after_ac = &p;
  }
  ASSERT_NE(after_ac, nullptr);
  const StimulusNetwork net = build_networks().main;
  int checked = 0;
  for (const auto& a : net.stimuli()) {
    for (const auto& b : net.stimuli()) {
      if (a == b) continue;
      const auto truth = net.expected_relation(a, b);
      ASSERT_TRUE(truth.has_value());
      const auto d = derive_named(Term::atom(a), Term::atom(b), after_ac->named,
                                  after_ac->hypotheses);
      ASSERT_TRUE(d.has_value()) << a << "," << b;
      EXPECT_EQ(d->cue, Term::atom(std::string(relation_name(*truth))))
          << a << "," << b;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 20);
}

// Without pre-training no combinatorial hypotheses exist, so the derived
// test cannot be solved and BC falls back to babbling.
TEST(RunExperiment, DerivedTestNeedsPretraining) {
  int correct = 0, trials = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.phases = {PhaseId::kAB, PhaseId::kAC, PhaseId::kBC};
    const RunResult r = run_experiment(cfg);
    for (const BlockMetrics& m : r.metrics) {
      if (m.phase_id != PhaseId::kBC) continue;
      correct += m.correct;
      trials += m.trials;
      EXPECT_EQ(m.babbles, m.trials);
    }
  }
  EXPECT_NEAR(static_cast<double>(correct) / trials, 0.5, 0.1);
}

TEST(RunExperiment, ByteIdenticalAcrossRuns) {
  RunConfig cfg;
  cfg.seed = 7;
  cfg.trace = true;
  const RunResult a = run_experiment(cfg);
  const RunResult b = run_experiment(cfg);
  EXPECT_EQ(metrics_csv(a.metrics), metrics_csv(b.metrics));
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.script, b.script);
}

TEST(RunExperiment, PhaseSubsetAndValidation) {
  RunConfig cfg;
  cfg.phases = {PhaseId::kAB, PhaseId::kAC};
  cfg.blocks = 2;
  EXPECT_EQ(run_experiment(cfg).metrics.size(), 4u);
  cfg.blocks = 0;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg.blocks = 1;
  cfg.trials_per_block = 10;
  EXPECT_THROW(run_experiment(cfg), InfeasibleBalance);
}

TEST(WriteOutputs, WritesFiles) {
  const fs::path dir = fs::temp_directory_path() / "narsrel_write_outputs";
  fs::remove_all(dir);
  RunConfig cfg;
  cfg.output_dir = dir;
  cfg.trace = true;
  cfg.phases = {PhaseId::kXY};
  const RunResult r = run_experiment(cfg);
  write_outputs(cfg, r);
  std::ifstream f(dir / "metrics.csv");
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), metrics_csv(r.metrics));
  EXPECT_TRUE(fs::exists(dir / "trace.log"));
  EXPECT_TRUE(fs::exists(dir / "replay.nars"));
  fs::remove_all(dir);

  cfg.output_dir = "/proc/narsrel_cannot_write";
  EXPECT_THROW(write_outputs(cfg, r), std::runtime_error);
}

TEST(Replay, EmptyScript) {
  std::istringstream in("");
  const ReplayResult r = replay(in);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.trace.empty());
}

TEST(Replay, WrongExpectationReportsLine) {
  std::istringstream in(
      "<(rel * SAME) --> (loc * ocr)>. :|:\n"
      "// a comment\n"
      "//expect <(rel * SAME) --> (loc * ocr)>\n"
      "//expect <(X1 * Y1) --> SAME>\n"
      "//expect never reached\n");
  const ReplayResult r = replay(in);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed_line, 4);
  ASSERT_EQ(r.annotations.size(), 2u);
  EXPECT_TRUE(r.annotations[0].passed);
  EXPECT_FALSE(r.annotations[1].passed);
}

TEST(Replay, MalformedLineReportsLine) {
  std::istringstream in("G! :|:\n");  // goal with an empty buffer
  EXPECT_EQ(replay(in).failed_line, 1);
  std::istringstream bad("<(a * b --> c>.\n");
  EXPECT_EQ(replay(bad).failed_line, 1);
  std::istringstream dir("!action sideways\n");
  EXPECT_EQ(replay(dir).failed_line, 1);
}

TEST(Replay, LadderScriptPasses) {
  const ReplayResult r =
      replay_file(fs::path(NARSREL_TEST_DATA_DIR) / "ladder.nars");
  EXPECT_TRUE(r.ok()) << r.error;
  EXPECT_EQ(r.annotations.size(), 11u);
}

TEST(Replay, RunScriptReproducesLearning) {
  RunConfig cfg;
  cfg.phases = {PhaseId::kXY, PhaseId::kYX};
  cfg.trace = true;
  const RunResult run = run_experiment(cfg);
  std::istringstream in(run.script);
  const ReplayResult r = replay(in);
  ASSERT_TRUE(r.ok()) << r.error;
  // Same beliefs in the same order; only decision kinds differ (forced).
  auto beliefs = [](const std::string& trace) {
    std::string out;
    std::istringstream s(trace);
    for (std::string line; std::getline(s, line);) {
      if (line.find("| mutual |") != std::string::npos ||
          line.find("| named |") != std::string::npos) {
        out += line + "\n";
      }
    }
    return out;
  };
  EXPECT_FALSE(beliefs(run.trace).empty());
  EXPECT_EQ(beliefs(run.trace), beliefs(r.trace));
}

}  // namespace
}  // namespace narsrel

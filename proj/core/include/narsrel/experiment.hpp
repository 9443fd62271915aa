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

#ifndef NARSREL_EXPERIMENT_HPP_
#define NARSREL_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "narsrel/acquisition.hpp"
#include "narsrel/engine.hpp"
#include "narsrel/mts.hpp"

namespace narsrel {

struct RunConfig {
  std::uint64_t seed = 42;
  int blocks = 4;
  int trials_per_block = 16;
  std::filesystem::path output_dir = ".";
  bool trace = false;
  std::vector<PhaseId> phases{std::begin(kAllPhases), std::end(kAllPhases)};
};

struct PhaseSummary {
  PhaseId phase_id = PhaseId::kXY;
  std::size_t feedback_processed = 0;
  std::size_t babbles = 0;
  /// Named relations and hypotheses held when the phase ended.
  std::vector<NamedRelation> named;
  std::vector<EntailmentHypothesis> hypotheses;
};

struct RunResult {
  std::vector<BlockMetrics> metrics;
  std::vector<PhaseSummary> phases;
  std::vector<Trial> trials;
  std::string trace;
  /// Replay script reproducing the run's inputs, actions and feedback.
  std::string script;
};

/// Mean confidence over a fixed set of slots, one per premise pattern (two
/// mutual, four combinatorial). Each slot holds the confidence of its
/// highest-expectation hypothesis, 0 while none exists.
std::pair<double, double> entailment_confidence(
    std::span<const EntailmentHypothesis> hyps);

/// Throws std::invalid_argument on a config that cannot run.
RunResult run_experiment(const RunConfig& cfg);

inline constexpr std::string_view kMetricsHeader =
    "phase,block,accuracy,conf_mutual,conf_combinatorial";

std::string metrics_csv(std::span<const BlockMetrics> metrics);

/// Writes metrics.csv, replay.nars and, if cfg.trace, trace.log. Throws
/// std::runtime_error on I/O failure.
void write_outputs(const RunConfig& cfg, const RunResult& result);

struct Annotation {
  int line = 0;
  std::string expected;
  bool passed = false;
};

struct ReplayResult {
  std::string trace;
  std::vector<Annotation> annotations;
  /// First failing line (expectation or malformed input), 0 if none.
  int failed_line = 0;
  std::string error;

  bool ok() const { return failed_line == 0; }
};

/// Script lines: Narsese sentences, `!action left|right` (forces the next
/// decision), `!feedback reinforced|not_reinforced|no_feedback`,
/// `//expect <substring>` (checked against the trace so far) and `//`
/// comments. Stops at the first failure.
ReplayResult replay(std::istream& script, std::uint64_t seed = 0);
ReplayResult replay_file(const std::filesystem::path& path,
                         std::uint64_t seed = 0);

}  // namespace narsrel

#endif  // NARSREL_EXPERIMENT_HPP_

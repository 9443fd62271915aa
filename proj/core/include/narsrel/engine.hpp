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

#ifndef NARSREL_ENGINE_HPP_
#define NARSREL_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "narsrel/acquisition.hpp"
#include "narsrel/action.hpp"
#include "narsrel/memory.hpp"
#include "narsrel/narsese.hpp"
#include "narsrel/truth.hpp"

namespace narsrel {

class NoPendingAction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EngineConfig {
  std::size_t buffer_capacity = 8;
  /// Minimum goal expectation for exploiting instead of babbling.
  double decision_threshold = 0.505;
  double priority_decay = 0.99;
  std::size_t stamp_capacity = Stamp::kDefaultCapacity;
  /// Truth of an observed event, used as premise when applying beliefs.
  TruthValue event_truth{1.0, 0.9};
};

/// Goal estimate for executing `^match` towards one side.
struct SideEvaluation {
  Side side = Side::kLeft;
  std::optional<TruthValue> truth;
  double expectation = 0.5;
};

struct Decision {
  Action action;
  bool babbled = false;
  std::array<SideEvaluation, 2> evaluations;
};

/// Single-threaded reasoner advanced by ingest calls.
///
/// Per trial: four present-tense events fill the buffer, `G! :|:` triggers
/// decide(), and process_feedback() runs the acquisition ladder on the
/// executed action.
class Engine {
 public:
  explicit Engine(EngineConfig config = {}, std::uint64_t seed = 0);

  /// Present judgments are buffered, eternal judgments revise memory and
  /// the goal `G` triggers a decision, which is returned.
  std::optional<Decision> ingest(const SentenceNode& sentence, Tick now);

  /// Adds an eternal belief with an explicit stamp.
  RevisionResult ingest_belief(const Term& term, const TruthValue& truth,
                               const Stamp& stamp, Tick now);

  /// Chooses and executes an action for the trial in the buffer. Throws
  /// IncompleteTrial if any trial event is missing.
  Decision decide(Tick now);

  /// Goal expectation of both actions for `trial`, without side effects.
  std::array<SideEvaluation, 2> evaluate(const TrialEvents& trial) const;

  /// The next decision executes `side` instead of deliberating.
  void force_next_action(Side side) { forced_ = side; }

  /// Throws NoPendingAction unless an action was executed since the last
  /// feedback.
  void process_feedback(Outcome outcome, Tick now);

  const EngineConfig& config() const { return config_; }
  const Memory& memory() const { return memory_; }
  const EventBuffer& buffer() const { return buffer_; }
  const Trace& trace() const { return trace_; }
  Trace& trace() { return trace_; }
  const std::vector<Term>& schemas() const { return schemas_; }

  std::size_t decisions() const { return decisions_; }
  std::size_t babbles() const { return babbles_; }
  std::size_t feedback_processed() const { return feedback_processed_; }

 private:
  struct Pending {
    TrialEvents trial;
    Action action;
  };

  Stamp fresh_stamp(Tick now);
  std::optional<TruthValue> relational_support(const TrialEvents& trial,
                                               Side side,
                                               std::span<const NamedRelation> named,
                                               std::span<const EntailmentHypothesis> hyps,
                                               Stamp* stamp) const;
  void learn_from(const Contingency& c, const Stamp& evidence, Tick now);

  EngineConfig config_;
  std::mt19937_64 rng_;
  Memory memory_;
  EventBuffer buffer_;
  Trace trace_;
  std::vector<Term> ground_implications_;
  std::vector<Term> schemas_;
  std::optional<Pending> pending_;
  std::optional<Side> forced_;
  bool trial_closed_ = false;  // next event starts a new trial
  EvidenceId next_evidence_ = 1;
  std::size_t decisions_ = 0;
  std::size_t babbles_ = 0;
  std::size_t feedback_processed_ = 0;
};

}  // namespace narsrel

#endif  // NARSREL_ENGINE_HPP_

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

// Matching-to-sample environment: stimulus networks, balanced trial blocks,
// the textual trial encoding and the feedback rule.

#ifndef NARSREL_MTS_HPP_
#define NARSREL_MTS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "narsrel/action.hpp"
#include "narsrel/narsese.hpp"

namespace narsrel {

enum class Relation { kSame, kOpposite };

std::string_view relation_name(Relation r);
Relation compose(Relation a, Relation b);

struct Edge {
  std::string a;
  std::string b;
  Relation relation = Relation::kSame;
  bool trained = true;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class StimulusNetwork {
 public:
  /// Adds `a`, `b` and a trained edge between them.
  void add_trained(std::string a, std::string b, Relation r);

  const std::vector<std::string>& stimuli() const { return stimuli_; }
  const std::vector<Edge>& trained_edges() const { return trained_; }

  /// Ground truth by exhaustive search over simple paths, multiplying signs.
  /// Reflexive pairs are SAME; disconnected or unknown stimuli give nothing.
  /// Throws std::logic_error if two paths disagree.
  std::optional<Relation> expected_relation(std::string_view a,
                                            std::string_view b) const;

  /// Closure of the trained edges under symmetry and composition, computed
  /// by sign propagation from each stimulus. Keyed by ordered pair, a != b.
  std::map<std::pair<std::string, std::string>, Relation> closure() const;

  /// Closure pairs that are not trained in either direction.
  std::vector<Edge> derived_edges() const;

  /// True if every cycle has a SAME sign product.
  bool is_consistent() const;

 private:
  bool trained_between(std::string_view a, std::string_view b) const;

  std::vector<std::string> stimuli_;
  std::vector<Edge> trained_;
};

struct Networks {
  StimulusNetwork pretrain;
  StimulusNetwork main;
};

/// The fixed pre-training (X/Y/Z) and main (A/B/C) networks.
Networks build_networks();

enum class PhaseId { kXY, kYX, kYZ, kXZ, kAB, kAC, kBC };

inline constexpr PhaseId kAllPhases[] = {PhaseId::kXY, PhaseId::kYX,
                                         PhaseId::kYZ, PhaseId::kXZ,
                                         PhaseId::kAB, PhaseId::kAC,
                                         PhaseId::kBC};

std::string_view phase_name(PhaseId p);
/// Throws std::invalid_argument on an unknown name.
PhaseId parse_phase(std::string_view s);
bool is_pretraining(PhaseId p);

/// One (sample, correct comparison, cue) combination a phase presents.
struct TrialTarget {
  std::string sample;
  std::string comparison;
  Relation cue = Relation::kSame;
};

struct PhaseConfig {
  PhaseId phase_id = PhaseId::kXY;
  int blocks = 4;
  int trials_per_block = 16;
  bool feedback = true;
  std::vector<TrialTarget> targets;
};

PhaseConfig default_phase(PhaseId p);

struct Trial {
  Relation cue = Relation::kSame;
  std::string sample;
  std::string left;
  std::string right;
  Side correct_side = Side::kLeft;
  PhaseId phase_id = PhaseId::kXY;
  int block_idx = 0;
  int trial_idx = 0;

  const std::string& comparison(Side s) const {
    return s == Side::kLeft ? left : right;
  }
};

class InfeasibleBalance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Network a phase draws its stimuli from.
const StimulusNetwork& network_for(PhaseId p, const Networks& nets);

/// Each target appears trials_per_block / #targets times, half with the
/// correct comparison left; order shuffled by `rng`. The foil is a stimulus
/// standing in the opposite relation to the sample.
/// Throws InfeasibleBalance if the block cannot be balanced or a target has
/// no foil or contradicts the network.
std::vector<Trial> generate_block(const PhaseConfig& cfg,
                                  const StimulusNetwork& net, int block_idx,
                                  std::mt19937_64& rng);

/// Cue, sample, left, right events followed by `G! :|:`.
std::vector<SentenceNode> present(const Trial& trial);

Outcome judge(const Trial& trial, Action action, bool feedback);

struct BlockMetrics {
  PhaseId phase_id = PhaseId::kXY;
  int block_idx = 0;
  int correct = 0;
  int trials = 0;
  int babbles = 0;
  double accuracy = 0.0;
  double mean_conf_mutual = 0.0;
  double mean_conf_combinatorial = 0.0;
};

}  // namespace narsrel

#endif  // NARSREL_MTS_HPP_

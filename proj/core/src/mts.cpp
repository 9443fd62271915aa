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

#include "narsrel/mts.hpp"

#include <algorithm>
#include <deque>

#include "narsrel/acquisition.hpp"

namespace narsrel {

std::string_view relation_name(Relation r) {
  return r == Relation::kSame ? vocab::kSame : vocab::kOpposite;
}

Relation compose(Relation a, Relation b) {
  return a == b ? Relation::kSame : Relation::kOpposite;
}

namespace {

Relation flip(Relation r) {
  return r == Relation::kSame ? Relation::kOpposite : Relation::kSame;
}

}  // namespace

void StimulusNetwork::add_trained(std::string a, std::string b, Relation r) {
  for (const std::string* s : {&a, &b}) {
    if (std::find(stimuli_.begin(), stimuli_.end(), *s) == stimuli_.end()) {
      stimuli_.push_back(*s);
    }
  }
  trained_.push_back(Edge{std::move(a), std::move(b), r, true});
}

bool StimulusNetwork::trained_between(std::string_view a,
                                      std::string_view b) const {
  return std::any_of(trained_.begin(), trained_.end(), [&](const Edge& e) {
    return (e.a == a && e.b == b) || (e.a == b && e.b == a);
  });
}

std::optional<Relation> StimulusNetwork::expected_relation(
    std::string_view a, std::string_view b) const {
  const auto known = [&](std::string_view s) {
    return std::find(stimuli_.begin(), stimuli_.end(), s) != stimuli_.end();
  };
  if (!known(a) || !known(b)) return std::nullopt;
  if (a == b) return Relation::kSame;

  std::optional<Relation> found;
  std::vector<std::string_view> path{a};
  // Depth-first over simple paths; every path must agree.
  auto dfs = [&](auto&& self, std::string_view at, Relation sign) -> void {
    for (const Edge& e : trained_) {
      std::string_view next;
      if (e.a == at) {
        next = e.b;
      } else if (e.b == at) {
        next = e.a;
      } else {
        continue;
      }
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      const Relation s = compose(sign, e.relation);
      if (next == b) {
        if (found && *found != s) {
          throw std::logic_error("inconsistent stimulus network");
        }
        found = s;
        continue;
      }
      path.push_back(next);
      self(self, next, s);
      path.pop_back();
    }
  };
  dfs(dfs, a, Relation::kSame);
  return found;
}

std::map<std::pair<std::string, std::string>, Relation>
StimulusNetwork::closure() const {
  std::map<std::pair<std::string, std::string>, Relation> out;
  for (const std::string& root : stimuli_) {
    std::map<std::string, Relation> sign{{root, Relation::kSame}};
    std::deque<std::string> frontier{root};
    while (!frontier.empty()) {
      const std::string at = frontier.front();
      frontier.pop_front();
      for (const Edge& e : trained_) {
        const std::string* next = nullptr;
        if (e.a == at) next = &e.b;
        if (e.b == at) next = &e.a;
        if (!next || sign.count(*next)) continue;
        sign[*next] = compose(sign[at], e.relation);
        frontier.push_back(*next);
      }
    }
    for (const auto& [s, r] : sign) {
      if (s != root) out[{root, s}] = r;
    }
  }
  return out;
}

std::vector<Edge> StimulusNetwork::derived_edges() const {
  std::vector<Edge> out;
  for (const auto& [pair, r] : closure()) {
    if (!trained_between(pair.first, pair.second)) {
      out.push_back(Edge{pair.first, pair.second, r, false});
    }
  }
  return out;
}

bool StimulusNetwork::is_consistent() const {
  // Label each component from its first stimulus; every trained edge must
  // agree with that labelling.
  const auto c = closure();
  const auto sign = [&](const std::string& root, const std::string& s) {
    return root == s ? Relation::kSame : c.at({root, s});
  };
  for (const Edge& e : trained_) {
    const auto root = std::find_if(
        stimuli_.begin(), stimuli_.end(),
        [&](const std::string& s) { return s == e.a || c.count({s, e.a}); });
    if (compose(sign(*root, e.a), e.relation) != sign(*root, e.b)) {
      return false;
    }
  }
  return true;
}

Networks build_networks() {
  Networks n;
  n.pretrain.add_trained("X1", "Y1", Relation::kSame);
  n.pretrain.add_trained("X1", "Y2", Relation::kOpposite);
  n.pretrain.add_trained("Y1", "Z1", Relation::kSame);
  n.pretrain.add_trained("Y1", "Z2", Relation::kOpposite);
  n.pretrain.add_trained("X1", "Z1", Relation::kSame);
  n.pretrain.add_trained("X1", "Z2", Relation::kOpposite);
  n.main.add_trained("A1", "B1", Relation::kSame);
  n.main.add_trained("A1", "B2", Relation::kOpposite);
  n.main.add_trained("A1", "C1", Relation::kSame);
  n.main.add_trained("A1", "C2", Relation::kOpposite);
  return n;
}

std::string_view phase_name(PhaseId p) {
  switch (p) {
    case PhaseId::kXY: return "XY";
    case PhaseId::kYX: return "YX";
    case PhaseId::kYZ: return "YZ";
    case PhaseId::kXZ: return "XZ";
    case PhaseId::kAB: return "AB";
    case PhaseId::kAC: return "AC";
    case PhaseId::kBC: return "BC";
  }
  return "";
}

PhaseId parse_phase(std::string_view s) {
  for (PhaseId p : kAllPhases) {
    if (phase_name(p) == s) return p;
  }
  throw std::invalid_argument("unknown phase '" + std::string(s) + "'");
}

bool is_pretraining(PhaseId p) {
  return p == PhaseId::kXY || p == PhaseId::kYX || p == PhaseId::kYZ ||
         p == PhaseId::kXZ;
}

PhaseConfig default_phase(PhaseId p) {
  constexpr Relation S = Relation::kSame;
  constexpr Relation O = Relation::kOpposite;
  PhaseConfig c;
  c.phase_id = p;
  c.feedback = p != PhaseId::kBC;
  switch (p) {
    case PhaseId::kXY:
      c.targets = {{"X1", "Y1", S}, {"X1", "Y2", O}};
      break;
    case PhaseId::kYX:
      c.targets = {{"Y1", "X1", S}, {"Y2", "X1", O}};
      break;
    case PhaseId::kYZ:
      c.targets = {{"Y1", "Z1", S}, {"Y1", "Z2", O},
                   {"Z1", "Y1", S}, {"Z2", "Y1", O}};
      break;
    case PhaseId::kXZ:
      c.targets = {{"X1", "Z1", S}, {"X1", "Z2", O},
                   {"Z1", "X1", S}, {"Z2", "X1", O}};
      break;
    case PhaseId::kAB:
      c.targets = {{"A1", "B1", S}, {"A1", "B2", O}};
      break;
    case PhaseId::kAC:
      c.targets = {{"A1", "C1", S}, {"A1", "C2", O}};
      break;
    case PhaseId::kBC:
      c.targets = {{"B1", "C1", S}, {"B1", "C2", O},
                   {"B2", "C1", O}, {"B2", "C2", S}};
      break;
  }
  return c;
}

const StimulusNetwork& network_for(PhaseId p, const Networks& nets) {
  return is_pretraining(p) ? nets.pretrain : nets.main;
}

namespace {

std::string pick_foil(const PhaseConfig& cfg, const StimulusNetwork& net,
                      const TrialTarget& t) {
  std::vector<std::string> order;
  for (const TrialTarget& o : cfg.targets) {
    for (const std::string* s : {&o.sample, &o.comparison}) {
      if (std::find(order.begin(), order.end(), *s) == order.end()) {
        order.push_back(*s);
      }
    }
  }
  for (const std::string& s : net.stimuli()) {
    if (std::find(order.begin(), order.end(), s) == order.end()) {
      order.push_back(s);
    }
  }
  for (const std::string& s : order) {
    if (s == t.sample || s == t.comparison) continue;
    if (net.expected_relation(t.sample, s) == flip(t.cue)) return s;
  }
  throw InfeasibleBalance("no foil for sample " + t.sample + " under " +
                          std::string(relation_name(t.cue)));
}

}  // namespace

std::vector<Trial> generate_block(const PhaseConfig& cfg,
                                  const StimulusNetwork& net, int block_idx,
                                  std::mt19937_64& rng) {
  const int slots = 2 * static_cast<int>(cfg.targets.size());
  if (slots == 0 || cfg.trials_per_block <= 0 ||
      cfg.trials_per_block % slots != 0) {
    throw InfeasibleBalance(
        std::to_string(cfg.trials_per_block) + " trials cannot balance " +
        std::to_string(cfg.targets.size()) + " targets over two sides");
  }
  const int reps = cfg.trials_per_block / slots;

  std::vector<Trial> block;
  block.reserve(static_cast<std::size_t>(cfg.trials_per_block));
  for (const TrialTarget& t : cfg.targets) {
    if (net.expected_relation(t.sample, t.comparison) != t.cue) {
      throw InfeasibleBalance("target " + t.sample + "/" + t.comparison +
                              " contradicts the network");
    }
    const std::string foil = pick_foil(cfg, net, t);
    for (Side side : {Side::kLeft, Side::kRight}) {
      for (int i = 0; i < reps; ++i) {
        Trial tr;
        tr.cue = t.cue;
        tr.sample = t.sample;
        tr.left = side == Side::kLeft ? t.comparison : foil;
        tr.right = side == Side::kLeft ? foil : t.comparison;
        tr.correct_side = side;
        tr.phase_id = cfg.phase_id;
        tr.block_idx = block_idx;
        block.push_back(std::move(tr));
      }
    }
  }
  std::shuffle(block.begin(), block.end(), rng);
  for (std::size_t i = 0; i < block.size(); ++i) {
    block[i].trial_idx = static_cast<int>(i);
  }
  return block;
}

std::vector<SentenceNode> present(const Trial& trial) {
  const auto event = [](std::string_view slot, std::string_view stim) {
    return SentenceNode{location_event(slot, Term::atom(std::string(stim))),
                        Punctuation::kJudgment, Tense::kPresent,
                        std::nullopt};
  };
  return {
      event(vocab::kRel, relation_name(trial.cue)),
      event(vocab::kSample, trial.sample),
      event(vocab::kLeft, trial.left),
      event(vocab::kRight, trial.right),
      SentenceNode{Term::atom(std::string(vocab::kGoal)), Punctuation::kGoal,
                   Tense::kPresent, std::nullopt},
  };
}

Outcome judge(const Trial& trial, Action action, bool feedback) {
  if (!feedback) return Outcome::kNoFeedback;
  return action.side == trial.correct_side ? Outcome::kReinforced
                                           : Outcome::kNotReinforced;
}

}  // namespace narsrel

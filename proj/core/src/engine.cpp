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

#include "narsrel/engine.hpp"

#include <algorithm>

#include "narsrel/unify.hpp"

namespace narsrel {

namespace {

std::string judgment(const Term& t) {
  return print_canonical(SentenceNode{t, Punctuation::kJudgment,
                                      Tense::kEternal, std::nullopt});
}

// Keeps the better of two estimates, or pools them if independent.
void pool(std::optional<TruthValue>& acc, Stamp& acc_stamp,
          const TruthValue& t, const Stamp& s) {
  if (!acc) {
    acc = t;
    acc_stamp = s;
  } else if (!acc_stamp.overlaps(s)) {
    acc = revise(*acc, t);
    acc_stamp = Stamp::merge(acc_stamp, s, acc_stamp.creation_time());
  } else if (t.confidence > acc->confidence) {
    acc = t;
    acc_stamp = s;
  }
}

}  // namespace

Engine::Engine(EngineConfig config, std::uint64_t seed)
    : config_(config),
      rng_(seed),
      memory_(config.priority_decay),
      buffer_(config.buffer_capacity) {}

Stamp Engine::fresh_stamp(Tick now) {
  return Stamp(next_evidence_++, now, config_.stamp_capacity);
}

std::optional<Decision> Engine::ingest(const SentenceNode& sentence,
                                       Tick now) {
  if (sentence.punctuation == Punctuation::kGoal) {
    trace_.record(now, "goal", print_canonical(sentence));
    if (!is_atom(sentence.term, vocab::kGoal)) return std::nullopt;
    return decide(now);
  }
  if (sentence.tense == Tense::kPresent) {
    if (trial_closed_) {
      buffer_.clear();
      trial_closed_ = false;
    }
    trace_.record(now, "event", print_canonical(sentence), sentence.truth);
    if (auto evicted = buffer_.push({sentence, now})) {
      trace_.record(now, "evict", print_canonical(evicted->sentence));
    }
    return std::nullopt;
  }
  ingest_belief(sentence.term, sentence.truth.value_or(config_.event_truth),
                fresh_stamp(now), now);
  return std::nullopt;
}

RevisionResult Engine::ingest_belief(const Term& term, const TruthValue& truth,
                                     const Stamp& stamp, Tick now) {
  const RevisionResult r = memory_.add(term, truth, stamp, now);
  const Belief* b = memory_.find(term);
  trace_.record(now, r == RevisionResult::kOverlap ? "overlap" : "belief",
                judgment(term), b->truth);
  return r;
}

std::optional<TruthValue> Engine::relational_support(
    const TrialEvents& trial, Side side, std::span<const NamedRelation> named,
    std::span<const EntailmentHypothesis> hyps, Stamp* stamp) const {
  const Term& comparison = trial.comparison(side);

  std::optional<TruthValue> relation;
  Stamp relation_stamp;
  for (const NamedRelation& r : named) {
    if (r.subject == trial.sample && r.object == comparison &&
        r.cue == trial.cue) {
      relation = r.truth;
      relation_stamp = r.stamp;
    }
  }
  if (!relation) {
    auto derived = derive_named(trial.sample, comparison, named, hyps);
    if (derived && derived->cue == trial.cue) {
      relation = derived->truth;
      relation_stamp = derived->stamp;
    }
  }
  if (!relation || schemas_.empty()) return std::nullopt;

  // Ground implication this action would instantiate.
  const Contingency candidate{trial.cue,  trial.sample,
                              comparison, side,
                              Action{side}, induction_evidence(true),
                              Stamp()};
  const Term implication = abstract_acquired_relation(candidate).implication;
  const TruthValue premise = intersection(*relation, config_.event_truth);

  std::optional<TruthValue> best;
  for (const Term& schema : schemas_) {
    if (!unify(schema, implication)) continue;
    const Belief* b = memory_.find(schema);
    if (!b) continue;
    const TruthValue t = deduction(premise, b->truth);
    if (!best || t.confidence > best->confidence) {
      best = t;
      *stamp = Stamp::merge(relation_stamp, b->stamp, 0);
    }
  }
  return best;
}

std::array<SideEvaluation, 2> Engine::evaluate(const TrialEvents& trial) const {
  const auto named = named_relations(memory_);
  const auto hyps = entailment_hypotheses(memory_);
  std::array<SideEvaluation, 2> out;
  for (Side side : {Side::kLeft, Side::kRight}) {
    std::optional<TruthValue> acc;
    Stamp acc_stamp;

    const Contingency direct{trial.cue,  trial.sample,
                             trial.comparison(side), side,
                             Action{side}, {}, Stamp()};
    if (const Belief* b = memory_.find(direct.term())) {
      // Antecedent observed: keep the contingency's frequency, so negative
      // evidence pulls the expectation below indifference.
      const TruthValue applied{
          b->truth.frequency,
          b->truth.confidence * config_.event_truth.confidence};
      pool(acc, acc_stamp, applied, b->stamp);
    }
    Stamp rel_stamp;
    if (auto t = relational_support(trial, side, named, hyps, &rel_stamp)) {
      pool(acc, acc_stamp, *t, rel_stamp);
    }
    SideEvaluation& e = out[side == Side::kLeft ? 0 : 1];
    e.side = side;
    e.truth = acc;
    e.expectation = acc ? expectation(*acc) : 0.5;
  }
  return out;
}

Decision Engine::decide(Tick now) {
  const TrialEvents trial = TrialEvents::from_buffer(buffer_);
  memory_.decay();
  Decision d;
  d.evaluations = evaluate(trial);
  const double left = d.evaluations[0].expectation;
  const double right = d.evaluations[1].expectation;

  const char* kind = "decide";
  if (forced_) {
    d.action = Action{*forced_};
    forced_.reset();
    kind = "forced";
  } else if (std::max(left, right) >= config_.decision_threshold &&
             left != right) {
    d.action = Action{left > right ? Side::kLeft : Side::kRight};
  } else {
    std::bernoulli_distribution coin(0.5);
    d.action = Action{coin(rng_) ? Side::kLeft : Side::kRight};
    d.babbled = true;
    ++babbles_;
    kind = "babble";
  }
  ++decisions_;

  const SideEvaluation& chosen =
      d.evaluations[d.action.side == Side::kLeft ? 0 : 1];
  const Term op = action_term(d.action);
  memory_.touch(Contingency{trial.cue, trial.sample,
                            trial.comparison(d.action.side), d.action.side,
                            d.action, {}, Stamp()}
                    .term());
  trace_.record(now, kind, print_canonical(SentenceNode{op, Punctuation::kGoal,
                                                        Tense::kPresent,
                                                        std::nullopt}),
                chosen.truth);
  pending_ = Pending{trial, d.action};
  trial_closed_ = true;
  return d;
}

void Engine::process_feedback(Outcome outcome, Tick now) {
  if (!pending_) {
    throw NoPendingAction("feedback without a preceding decision");
  }
  const Pending p = *pending_;
  pending_.reset();
  trace_.record(now, outcome_name(outcome), to_string(action_term(p.action)));
  if (outcome == Outcome::kNoFeedback) return;

  ++feedback_processed_;
  const Stamp evidence = fresh_stamp(now);
  const Contingency c = form_contingency(p.trial, p.action, outcome, evidence);
  memory_.add(c.term(), c.truth, evidence, now);
  trace_.record(now, "contingency", judgment(c.term()),
                memory_.find(c.term())->truth);
  if (outcome == Outcome::kReinforced) learn_from(c, evidence, now);
}

void Engine::learn_from(const Contingency& c, const Stamp& evidence,
                        Tick now) {
  const Abstraction abs = abstract_acquired_relation(c);
  const Term acquired = abs.relation.term();
  memory_.add(acquired, c.truth, evidence, now);
  trace_.record(now, "acquired", judgment(acquired),
                memory_.find(acquired)->truth);
  memory_.add(abs.implication, c.truth, evidence, now);
  trace_.record(now, "implication", judgment(abs.implication),
                memory_.find(abs.implication)->truth);

  if (std::find(ground_implications_.begin(), ground_implications_.end(),
                abs.implication) == ground_implications_.end()) {
    ground_implications_.push_back(abs.implication);
  }

  std::optional<Term> created;
  if (ground_implications_.size() >= 2) {
    Term schema = generalize_schema(ground_implications_);
    if (std::find(schemas_.begin(), schemas_.end(), schema) ==
        schemas_.end()) {
      for (const Term& gi : ground_implications_) {
        const Belief* b = memory_.find(gi);
        memory_.add(schema, b->truth, b->stamp, now);
      }
      schemas_.push_back(schema);
      trace_.record(now, "schema", judgment(schema),
                    memory_.find(schema)->truth);
      created = std::move(schema);
    }
  }
  for (const Term& schema : schemas_) {
    if (created && schema == *created) continue;
    if (!unify(schema, abs.implication)) continue;
    if (memory_.add(schema, c.truth, evidence, now) != RevisionResult::kOverlap) {
      trace_.record(now, "schema", judgment(schema),
                    memory_.find(schema)->truth);
    }
  }

  NamedRelation named = name_relation(c);
  memory_.add(named.term(), named.truth, evidence, now);
  trace_.record(now, "named", judgment(named.term()),
                memory_.find(named.term())->truth);
  trace_.record(now, "named", judgment(named.long_form()),
                memory_.find(named.term())->truth);

  const auto stored = named_relations(memory_);
  for (const auto& inst : entailment_instances(named, stored)) {
    for (const auto& h : record_instance(inst, evidence, memory_, now)) {
      trace_.record(now,
                    h.kind == EntailmentKind::kMutual ? "mutual"
                                                      : "combinatorial",
                    judgment(h.schema), h.truth);
    }
  }
}

}  // namespace narsrel

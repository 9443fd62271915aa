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

// The relational abstraction ladder:
//
//   reinforced trial -> Contingency -> AcquiredRelation + implication
//                    -> variable schema
//                    -> NamedRelation -> EntailmentHypothesis
//
// Cues are opaque terms here. Nothing in this module knows what SAME or
// OPPOSITE mean; entailment hypotheses are induced purely from which named
// relations co-occur.

#ifndef NARSREL_ACQUISITION_HPP_
#define NARSREL_ACQUISITION_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "narsrel/action.hpp"
#include "narsrel/memory.hpp"
#include "narsrel/term.hpp"
#include "narsrel/truth.hpp"

namespace narsrel {

class IncompleteTrial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a ladder step is applied to evidence that was not reinforced.
class NotReinforced : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `<(slot * stimulus) --> (loc * ocr)>`
Term location_event(std::string_view slot, const Term& stimulus);

/// The four stimulus bindings of one matching-to-sample trial.
struct TrialEvents {
  Term cue;
  Term sample;
  Term left;
  Term right;

  /// Most recent binding of each slot in the buffer. Throws IncompleteTrial
  /// if any of rel/sample/left/right is missing.
  static TrialEvents from_buffer(const EventBuffer& buffer);

  const Term& comparison(Side side) const {
    return side == Side::kLeft ? left : right;
  }
};

struct Contingency {
  Term cue;
  Term sample_stimulus;
  Term comparison_stimulus;
  Side comparison_side = Side::kLeft;
  Action action;
  TruthValue truth;
  Stamp stamp;

  /// `(cue-event &/ sample-event &/ side-event &/ ^match) =/> G`
  Term term() const;
};

/// Throws IncompleteTrial via TrialEvents, std::invalid_argument for
/// Outcome::kNoFeedback.
Contingency form_contingency(const TrialEvents& trial, Action action,
                             Outcome outcome, const Stamp& stamp);

struct AcquiredRelation {
  std::pair<Term, Term> stimulus_pair;
  std::pair<Term, Term> location_pair;
  TruthValue truth;

  /// `<(a * b) --> (ocr * ocr)> && <(l1 * l2) --> (loc * loc)>`
  Term term() const;
};

struct Abstraction {
  AcquiredRelation relation;
  /// `relation ==> ((sample-event &/ side-event &/ ^match) =/> G)`
  Term implication;
};

/// Throws NotReinforced unless expectation(c.truth) > 0.5.
Abstraction abstract_acquired_relation(const Contingency& c);

/// Anti-unifies implications of identical skeleton. Each distinct column of
/// atoms (the atoms found at one position across all instances) that is
/// abstracted becomes one independent variable, substituted at every
/// position holding that column. A column is abstracted if it varies, or if
/// it sits in an atom-only product of the antecedent that varies anywhere,
/// so the stimulus and location pairs are generalised as units. Result is
/// variable-canonical.
/// Throws ShapeMismatch on differing skeletons, std::invalid_argument on an
/// empty set.
Term generalize_schema(std::span<const Term> implications);

struct NamedRelation {
  Term cue;
  Term subject;
  Term object;
  TruthValue truth;
  Stamp stamp;

  /// `<(subject * object) --> cue>`
  Term term() const;
  /// `<(cue * (subject * object)) --> (ocr * (ocr * ocr))>`
  Term long_form() const;

  /// Accepts either form; nothing if `t` is neither.
  static std::optional<NamedRelation> from_term(const Term& t,
                                                const TruthValue& truth,
                                                const Stamp& stamp);
};

/// Throws NotReinforced unless expectation(c.truth) > 0.5.
NamedRelation name_relation(const Contingency& c);

enum class EntailmentKind { kMutual, kCombinatorial };

/// `<<($1 * $2) --> r> ==> <($2 * $1) --> r2>>`
Term mutual_schema(const Term& r, const Term& r2);
/// `<(<($1 * #1) --> r1> && <(#1 * $2) --> r2>) ==> <($1 * $2) --> r3>>`
Term combinatorial_schema(const Term& r1, const Term& r2, const Term& r3);

struct EntailmentHypothesis {
  EntailmentKind kind = EntailmentKind::kMutual;
  Term schema;
  TruthValue truth;
  Stamp stamp;

  /// Cue of each premise, in premise order.
  std::vector<Term> premise_cues() const;
  Term conclusion_cue() const;

  /// Recognises mutual and combinatorial schemas; nothing otherwise.
  static std::optional<EntailmentHypothesis> from_belief(const Belief& b);
};

/// One co-occurrence of named relations matching an entailment pattern.
struct EntailmentInstance {
  EntailmentKind kind = EntailmentKind::kMutual;
  std::vector<Term> premise_cues;
  Term conclusion_cue;
  /// Union of the stamps of the participating named relations.
  Stamp premise_stamp;

  Term schema() const;
};

/// Instances in which `trigger` takes part together with relations from
/// `others` (the trigger itself is skipped if present there). Mutual: the
/// other relation is the premise and the trigger the conclusion.
/// Combinatorial: stimuli a, b, c pairwise distinct with (a,b), (b,c), (a,c)
/// all named, the trigger in any of the three roles.
std::vector<EntailmentInstance> entailment_instances(
    const NamedRelation& trigger, std::span<const NamedRelation> others);

/// Adds one unit of evidence for `instance` (stamped `evidence`) to memory,
/// and one unit of negative evidence to every stored hypothesis with the same
/// premises but a different conclusion. Returns the hypotheses touched, with
/// their updated truth.
std::vector<EntailmentHypothesis> record_instance(
    const EntailmentInstance& instance, const Stamp& evidence, Memory& memory,
    Tick now);

/// Batch form over a set of named relations: each relation is treated as
/// arriving after the ones before it, and every instance counts once with
/// the union of its premise stamps as evidence.
std::vector<EntailmentHypothesis> induce_entailments(
    std::span<const NamedRelation> named);

/// Every stored named relation and entailment hypothesis, in memory order.
std::vector<NamedRelation> named_relations(const Memory& memory);
std::vector<EntailmentHypothesis> entailment_hypotheses(const Memory& memory);

struct DerivedRelation {
  Term cue;
  TruthValue truth;
  Stamp stamp;
};

/// Relation between `subject` and `object` obtained by chaining entailment
/// hypotheses over stored named relations: a mutual inversion, or a single
/// combinatorial step through a middle stimulus whose two links are each
/// either stored or inverted once. Chains are scored by deduction; chains
/// for the same cue are revised when their stamps are disjoint. Returns the
/// cue with the highest expectation, or nothing if no chain exists.
std::optional<DerivedRelation> derive_named(const Term& subject,
                                            const Term& object,
                                            const Memory& memory);
std::optional<DerivedRelation> derive_named(
    const Term& subject, const Term& object,
    std::span<const NamedRelation> named,
    std::span<const EntailmentHypothesis> hypotheses);

}  // namespace narsrel

#endif  // NARSREL_ACQUISITION_HPP_

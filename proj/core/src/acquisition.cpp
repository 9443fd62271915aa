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

#include "narsrel/acquisition.hpp"

#include <map>
#include <set>

namespace narsrel {

namespace {

Term atom(std::string_view name) { return Term::atom(std::string(name)); }

Term pair_of(std::string_view a, std::string_view b) {
  return Term::product(atom(a), atom(b));
}

Term goal() { return atom(vocab::kGoal); }

void require_reinforced(const Contingency& c, const char* step) {
  if (!(expectation(c.truth) > 0.5)) {
    throw NotReinforced(std::string(step) +
                        " requires a reinforced contingency");
  }
}

// <(subject * object) --> cue> with atomic cue.
std::optional<std::pair<Term, Term>> short_form_parts(const Term& t,
                                                      Term* cue) {
  if (t.kind() != TermKind::kInheritance) return std::nullopt;
  const Term& subj = t.child(0);
  const Term& pred = t.child(1);
  if (subj.kind() != TermKind::kProduct || pred.kind() != TermKind::kAtom) {
    return std::nullopt;
  }
  *cue = pred;
  return std::pair{subj.child(0), subj.child(1)};
}

}  // namespace

Term location_event(std::string_view slot, const Term& stimulus) {
  return Term::inheritance(Term::product(atom(slot), stimulus),
                           pair_of(vocab::kLoc, vocab::kOcr));
}

// --- trial events ----------------------------------------------------------

TrialEvents TrialEvents::from_buffer(const EventBuffer& buffer) {
  std::optional<Term> slots[4];
  static constexpr std::string_view kSlots[4] = {vocab::kRel, vocab::kSample,
                                                 vocab::kLeft, vocab::kRight};
  const Term loc_ocr = pair_of(vocab::kLoc, vocab::kOcr);
  for (const BufferedEvent& e : buffer.events()) {
    const Term& t = e.sentence.term;
    if (e.sentence.punctuation != Punctuation::kJudgment ||
        t.kind() != TermKind::kInheritance || !(t.child(1) == loc_ocr) ||
        t.child(0).kind() != TermKind::kProduct ||
        t.child(0).child(0).kind() != TermKind::kAtom) {
      continue;
    }
    const std::string& slot = t.child(0).child(0).name();
    for (int i = 0; i < 4; ++i) {
      if (slot == kSlots[i]) slots[i] = t.child(0).child(1);
    }
  }
  std::string missing;
  for (int i = 0; i < 4; ++i) {
    if (!slots[i]) {
      if (!missing.empty()) missing += ", ";
      missing += kSlots[i];
    }
  }
  if (!missing.empty()) {
    throw IncompleteTrial("trial events missing for: " + missing);
  }
  return {*slots[0], *slots[1], *slots[2], *slots[3]};
}

// --- contingency -----------------------------------------------------------

Term Contingency::term() const {
  return Term::implication(
      ImplicationKind::kPredictive,
      Term::sequence({location_event(vocab::kRel, cue),
                      location_event(vocab::kSample, sample_stimulus),
                      location_event(side_name(comparison_side),
                                     comparison_stimulus),
                      action_term(action)}),
      goal());
}

Contingency form_contingency(const TrialEvents& trial, Action action,
                             Outcome outcome, const Stamp& stamp) {
  if (outcome == Outcome::kNoFeedback) {
    throw std::invalid_argument("a contingency needs feedback");
  }
  return Contingency{trial.cue,
                     trial.sample,
                     trial.comparison(action.side),
                     action.side,
                     action,
                     induction_evidence(outcome == Outcome::kReinforced),
                     stamp};
}

// --- acquired relation -----------------------------------------------------

Term AcquiredRelation::term() const {
  return Term::conjunction(
      Term::inheritance(
          Term::product(stimulus_pair.first, stimulus_pair.second),
          pair_of(vocab::kOcr, vocab::kOcr)),
      Term::inheritance(
          Term::product(location_pair.first, location_pair.second),
          pair_of(vocab::kLoc, vocab::kLoc)));
}

Abstraction abstract_acquired_relation(const Contingency& c) {
  require_reinforced(c, "abstract_acquired_relation");
  const Term sample_loc = atom(vocab::kSample);
  const Term side_loc = atom(side_name(c.comparison_side));
  AcquiredRelation rel{{c.sample_stimulus, c.comparison_stimulus},
                       {sample_loc, side_loc},
                       c.truth};
  Term behaviour = Term::implication(
      ImplicationKind::kPredictive,
      Term::sequence({location_event(vocab::kSample, c.sample_stimulus),
                      location_event(side_name(c.comparison_side),
                                     c.comparison_stimulus),
                      action_term(c.action)}),
      goal());
  Term implication = Term::implication(ImplicationKind::kPlain, rel.term(),
                                       std::move(behaviour));
  return {std::move(rel), std::move(implication)};
}

// --- schema generalisation -------------------------------------------------

namespace {

using Column = std::vector<std::string>;

void check_shape(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) throw ShapeMismatch("implications differ in shape");
  switch (a.kind()) {
    case TermKind::kAtom:
      return;
    case TermKind::kIndependentVar:
    case TermKind::kDependentVar:
      if (a.var_id() != b.var_id()) {
        throw ShapeMismatch("implications differ in variables");
      }
      return;
    case TermKind::kImplication:
      if (a.implication_kind() != b.implication_kind()) {
        throw ShapeMismatch("implications differ in copula");
      }
      break;
    case TermKind::kOperation:
      if (a.name() != b.name()) {
        throw ShapeMismatch("implications differ in operator");
      }
      break;
    default:
      break;
  }
  if (a.children().size() != b.children().size()) {
    throw ShapeMismatch("implications differ in arity");
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    check_shape(a.child(i), b.child(i));
  }
}

Column column_at(std::span<const Term* const> nodes) {
  Column col;
  col.reserve(nodes.size());
  for (const Term* n : nodes) col.push_back(n->name());
  return col;
}

bool varies(const Column& col) {
  for (const auto& s : col) {
    if (s != col.front()) return true;
  }
  return false;
}

// Walks all instances in lockstep, collecting columns to abstract.
void mark(std::span<const Term* const> nodes, bool in_antecedent,
          std::set<Column>& abstract) {
  const Term& head = *nodes.front();
  if (head.kind() == TermKind::kAtom) {
    Column col = column_at(nodes);
    if (varies(col)) abstract.insert(std::move(col));
    return;
  }
  if (in_antecedent && head.kind() == TermKind::kProduct &&
      head.child(0).kind() == TermKind::kAtom &&
      head.child(1).kind() == TermKind::kAtom) {
    std::vector<const Term*> left, right;
    for (const Term* n : nodes) {
      left.push_back(&n->child(0));
      right.push_back(&n->child(1));
    }
    Column lc = column_at(left);
    Column rc = column_at(right);
    if (varies(lc) || varies(rc)) {
      abstract.insert(std::move(lc));
      abstract.insert(std::move(rc));
    }
    return;
  }
  for (std::size_t i = 0; i < head.children().size(); ++i) {
    std::vector<const Term*> kids;
    kids.reserve(nodes.size());
    for (const Term* n : nodes) kids.push_back(&n->child(i));
    mark(kids, in_antecedent, abstract);
  }
}

Term rebuild(std::span<const Term* const> nodes,
             const std::set<Column>& abstract, std::map<Column, int>& ids) {
  const Term& head = *nodes.front();
  if (head.kind() == TermKind::kAtom) {
    Column col = column_at(nodes);
    if (!abstract.contains(col)) return head;
    auto [it, fresh] =
        ids.try_emplace(std::move(col), static_cast<int>(ids.size()) + 1);
    return Term::independent_var(it->second);
  }
  if (head.children().empty()) return head;
  std::vector<Term> kids;
  for (std::size_t i = 0; i < head.children().size(); ++i) {
    std::vector<const Term*> column;
    for (const Term* n : nodes) column.push_back(&n->child(i));
    kids.push_back(rebuild(column, abstract, ids));
  }
  return with_children(head, std::move(kids));
}

}  // namespace

Term generalize_schema(std::span<const Term> implications) {
  if (implications.empty()) {
    throw std::invalid_argument("generalize_schema needs at least one term");
  }
  for (const Term& t : implications.subspan(1)) {
    check_shape(implications.front(), t);
  }
  std::vector<const Term*> roots;
  for (const Term& t : implications) roots.push_back(&t);

  // Only the outermost implication's antecedent holds the relation pairs.
  std::set<Column> abstract;
  const Term& head = implications.front();
  if (head.kind() == TermKind::kImplication) {
    std::vector<const Term*> ante, cons;
    for (const Term* r : roots) {
      ante.push_back(&r->child(0));
      cons.push_back(&r->child(1));
    }
    mark(ante, true, abstract);
    mark(cons, false, abstract);
  } else {
    mark(roots, false, abstract);
  }
  std::map<Column, int> ids;
  return canonicalize_variables(rebuild(roots, abstract, ids));
}

// --- named relations -------------------------------------------------------

Term NamedRelation::term() const {
  return Term::inheritance(Term::product(subject, object), cue);
}

Term NamedRelation::long_form() const {
  return Term::inheritance(
      Term::product(cue, Term::product(subject, object)),
      Term::product(atom(vocab::kOcr), pair_of(vocab::kOcr, vocab::kOcr)));
}

std::optional<NamedRelation> NamedRelation::from_term(const Term& t,
                                                      const TruthValue& truth,
                                                      const Stamp& stamp) {
  if (!t.is_ground()) return std::nullopt;
  Term cue = t;
  if (auto parts = short_form_parts(t, &cue)) {
    return NamedRelation{cue, parts->first, parts->second, truth, stamp};
  }
  // <(cue * (a * b)) --> (ocr * (ocr * ocr))>
  const Term long_pred =
      Term::product(atom(vocab::kOcr), pair_of(vocab::kOcr, vocab::kOcr));
  if (t.kind() == TermKind::kInheritance && t.child(1) == long_pred &&
      t.child(0).kind() == TermKind::kProduct &&
      t.child(0).child(0).kind() == TermKind::kAtom &&
      t.child(0).child(1).kind() == TermKind::kProduct) {
    const Term& pair = t.child(0).child(1);
    return NamedRelation{t.child(0).child(0), pair.child(0), pair.child(1),
                         truth, stamp};
  }
  return std::nullopt;
}

NamedRelation name_relation(const Contingency& c) {
  require_reinforced(c, "name_relation");
  return NamedRelation{c.cue, c.sample_stimulus, c.comparison_stimulus,
                       c.truth, c.stamp};
}

// --- entailment hypotheses -------------------------------------------------

namespace {

Term ivar(int i) { return Term::independent_var(i); }
Term dvar(int i) { return Term::dependent_var(i); }

Term relation_statement(Term a, Term b, const Term& cue) {
  return Term::inheritance(Term::product(std::move(a), std::move(b)), cue);
}

}  // namespace

Term mutual_schema(const Term& r, const Term& r2) {
  return Term::implication(ImplicationKind::kPlain,
                           relation_statement(ivar(1), ivar(2), r),
                           relation_statement(ivar(2), ivar(1), r2));
}

Term combinatorial_schema(const Term& r1, const Term& r2, const Term& r3) {
  return Term::implication(
      ImplicationKind::kPlain,
      Term::conjunction(relation_statement(ivar(1), dvar(1), r1),
                        relation_statement(dvar(1), ivar(2), r2)),
      relation_statement(ivar(1), ivar(2), r3));
}

std::vector<Term> EntailmentHypothesis::premise_cues() const {
  const Term& ante = schema.child(0);
  if (kind == EntailmentKind::kMutual) return {ante.child(1)};
  return {ante.child(0).child(1), ante.child(1).child(1)};
}

Term EntailmentHypothesis::conclusion_cue() const {
  return schema.child(1).child(1);
}

std::optional<EntailmentHypothesis> EntailmentHypothesis::from_belief(
    const Belief& b) {
  const Term& t = b.term;
  if (t.kind() != TermKind::kImplication ||
      t.implication_kind() != ImplicationKind::kPlain) {
    return std::nullopt;
  }
  const Term& ante = t.child(0);
  const Term& cons = t.child(1);
  if (cons.kind() != TermKind::kInheritance ||
      cons.child(1).kind() != TermKind::kAtom) {
    return std::nullopt;
  }
  if (ante.kind() == TermKind::kInheritance &&
      ante.child(1).kind() == TermKind::kAtom &&
      t == mutual_schema(ante.child(1), cons.child(1))) {
    return EntailmentHypothesis{EntailmentKind::kMutual, t, b.truth, b.stamp};
  }
  if (ante.kind() == TermKind::kConjunction &&
      ante.child(0).kind() == TermKind::kInheritance &&
      ante.child(1).kind() == TermKind::kInheritance &&
      ante.child(0).child(1).kind() == TermKind::kAtom &&
      ante.child(1).child(1).kind() == TermKind::kAtom &&
      t == combinatorial_schema(ante.child(0).child(1),
                                ante.child(1).child(1), cons.child(1))) {
    return EntailmentHypothesis{EntailmentKind::kCombinatorial, t, b.truth,
                                b.stamp};
  }
  return std::nullopt;
}

Term EntailmentInstance::schema() const {
  if (kind == EntailmentKind::kMutual) {
    return mutual_schema(premise_cues.at(0), conclusion_cue);
  }
  return combinatorial_schema(premise_cues.at(0), premise_cues.at(1),
                              conclusion_cue);
}

std::vector<EntailmentInstance> entailment_instances(
    const NamedRelation& trigger, std::span<const NamedRelation> others) {
  std::vector<const NamedRelation*> pool;
  const Term trigger_term = trigger.term();
  for (const NamedRelation& r : others) {
    if (!(r.term() == trigger_term)) pool.push_back(&r);
  }
  auto between = [&](const Term& a, const Term& b) {
    std::vector<const NamedRelation*> out;
    for (const NamedRelation* r : pool) {
      if (r->subject == a && r->object == b) out.push_back(r);
    }
    return out;
  };
  auto stamp_of = [&](std::initializer_list<const NamedRelation*> rs) {
    Stamp s = trigger.stamp;
    for (const NamedRelation* r : rs) s = Stamp::merge(s, r->stamp, s.creation_time());
    return s;
  };

  std::vector<EntailmentInstance> out;
  const Term& p = trigger.subject;
  const Term& q = trigger.object;
  if (p == q) return out;

  for (const NamedRelation* back : between(q, p)) {
    out.push_back({EntailmentKind::kMutual, {back->cue}, trigger.cue,
                   stamp_of({back})});
  }

  auto distinct = [](const Term& x, const Term& y, const Term& z) {
    return !(x == y) && !(y == z) && !(x == z);
  };
  for (const NamedRelation* r : pool) {
    // trigger as (a,b): r is (b,c); look up (a,c).
    if (r->subject == q && distinct(p, q, r->object)) {
      for (const NamedRelation* ac : between(p, r->object)) {
        out.push_back({EntailmentKind::kCombinatorial,
                       {trigger.cue, r->cue},
                       ac->cue,
                       stamp_of({r, ac})});
      }
    }
    // trigger as (b,c): r is (a,b); look up (a,c).
    if (r->object == p && distinct(r->subject, p, q)) {
      for (const NamedRelation* ac : between(r->subject, q)) {
        out.push_back({EntailmentKind::kCombinatorial,
                       {r->cue, trigger.cue},
                       ac->cue,
                       stamp_of({r, ac})});
      }
    }
    // trigger as (a,c): r is (a,m); look up (m,c).
    if (r->subject == p && distinct(p, r->object, q)) {
      for (const NamedRelation* mc : between(r->object, q)) {
        out.push_back({EntailmentKind::kCombinatorial,
                       {r->cue, mc->cue},
                       trigger.cue,
                       stamp_of({r, mc})});
      }
    }
  }
  return out;
}

std::vector<EntailmentHypothesis> record_instance(
    const EntailmentInstance& instance, const Stamp& evidence, Memory& memory,
    Tick now) {
  std::vector<EntailmentHypothesis> touched;
  auto note = [&](const Term& schema) {
    const Belief* b = memory.find(schema);
    if (!b) return;
    if (auto h = EntailmentHypothesis::from_belief(*b)) {
      touched.push_back(std::move(*h));
    }
  };

  // Negative evidence for rivals: same premises, different conclusion.
  std::vector<Term> rivals;
  for (const auto& [key, belief] : memory) {
    auto h = EntailmentHypothesis::from_belief(belief);
    if (!h || h->kind != instance.kind) continue;
    if (h->premise_cues() == instance.premise_cues &&
        !(h->conclusion_cue() == instance.conclusion_cue)) {
      rivals.push_back(h->schema);
    }
  }

  const Term schema = instance.schema();
  if (memory.add(schema, induction_evidence(true), evidence, now) !=
      RevisionResult::kOverlap) {
    note(schema);
  }
  for (const Term& r : rivals) {
    if (memory.add(r, induction_evidence(false), evidence, now) !=
        RevisionResult::kOverlap) {
      note(r);
    }
  }
  return touched;
}

std::vector<EntailmentHypothesis> induce_entailments(
    std::span<const NamedRelation> named) {
  Memory memory;
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (const auto& inst : entailment_instances(named[i], named.first(i))) {
      record_instance(inst, inst.premise_stamp, memory, 0);
    }
  }
  return entailment_hypotheses(memory);
}

std::vector<NamedRelation> named_relations(const Memory& memory) {
  std::vector<NamedRelation> out;
  for (const auto& [key, b] : memory) {
    if (auto r = NamedRelation::from_term(b.term, b.truth, b.stamp)) {
      out.push_back(std::move(*r));
    }
  }
  return out;
}

std::vector<EntailmentHypothesis> entailment_hypotheses(const Memory& memory) {
  std::vector<EntailmentHypothesis> out;
  for (const auto& [key, b] : memory) {
    if (auto h = EntailmentHypothesis::from_belief(b)) out.push_back(std::move(*h));
  }
  return out;
}

// --- derivation ------------------------------------------------------------

namespace {

struct Link {
  Term cue;
  TruthValue truth;
  Stamp stamp;
};

void pool_into(std::map<std::string, Link>& by_cue, Link link) {
  const std::string key = to_string(link.cue);
  auto it = by_cue.find(key);
  if (it == by_cue.end()) {
    by_cue.emplace(key, std::move(link));
    return;
  }
  Link& acc = it->second;
  if (!acc.stamp.overlaps(link.stamp)) {
    acc.truth = revise(acc.truth, link.truth);
    acc.stamp = Stamp::merge(acc.stamp, link.stamp, acc.stamp.creation_time());
  } else if (link.truth.confidence > acc.truth.confidence) {
    acc = std::move(link);
  }
}

}  // namespace

std::optional<DerivedRelation> derive_named(
    const Term& subject, const Term& object,
    std::span<const NamedRelation> named,
    std::span<const EntailmentHypothesis> hypotheses) {
  std::vector<const EntailmentHypothesis*> mutual, combinatorial;
  for (const auto& h : hypotheses) {
    (h.kind == EntailmentKind::kMutual ? mutual : combinatorial).push_back(&h);
  }

  // Stored relation from -> to, or a stored to -> from inverted once.
  auto links = [&](const Term& from, const Term& to) {
    std::vector<Link> out;
    for (const NamedRelation& r : named) {
      if (r.subject == from && r.object == to) {
        out.push_back({r.cue, r.truth, r.stamp});
      }
      if (r.subject == to && r.object == from) {
        for (const EntailmentHypothesis* h : mutual) {
          if (!(h->premise_cues().front() == r.cue)) continue;
          out.push_back({h->conclusion_cue(), deduction(r.truth, h->truth),
                         Stamp::merge(r.stamp, h->stamp, 0)});
        }
      }
    }
    return out;
  };

  std::map<std::string, Link> by_cue;
  for (Link& l : links(subject, object)) pool_into(by_cue, std::move(l));

  std::vector<Term> middles;
  for (const NamedRelation& r : named) {
    for (const Term* s : {&r.subject, &r.object}) {
      if (*s == subject || *s == object) continue;
      bool seen = false;
      for (const Term& m : middles) seen = seen || m == *s;
      if (!seen) middles.push_back(*s);
    }
  }
  for (const Term& m : middles) {
    const auto first = links(subject, m);
    if (first.empty()) continue;
    const auto second = links(m, object);
    for (const Link& a : first) {
      for (const Link& b : second) {
        for (const EntailmentHypothesis* h : combinatorial) {
          const auto cues = h->premise_cues();
          if (!(cues[0] == a.cue) || !(cues[1] == b.cue)) continue;
          pool_into(by_cue,
                    {h->conclusion_cue(),
                     deduction(intersection(a.truth, b.truth), h->truth),
                     Stamp::merge(Stamp::merge(a.stamp, b.stamp, 0), h->stamp,
                                  0)});
        }
      }
    }
  }

  const Link* best = nullptr;
  for (const auto& [key, link] : by_cue) {
    if (!best || expectation(link.truth) > expectation(best->truth)) {
      best = &link;
    }
  }
  if (!best) return std::nullopt;
  return DerivedRelation{best->cue, best->truth, best->stamp};
}

std::optional<DerivedRelation> derive_named(const Term& subject,
                                            const Term& object,
                                            const Memory& memory) {
  const auto named = named_relations(memory);
  const auto hyps = entailment_hypotheses(memory);
  return derive_named(subject, object, named, hyps);
}

}  // namespace narsrel

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

#include "narsrel/term.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace narsrel {

Term Term::make(Node node) {
  for (const Term& c : node.children) {
    node.ground = node.ground && c.is_ground();
    node.depth = std::max(node.depth, c.depth() + 1);
  }
  return Term(std::make_shared<const Node>(std::move(node)));
}

Term Term::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must not be empty");
  Node n;
  n.kind = TermKind::kAtom;
  n.name = std::move(name);
  return make(std::move(n));
}

Term Term::independent_var(int id) {
  if (id < 1) throw std::invalid_argument("variable id must be positive");
  Node n;
  n.kind = TermKind::kIndependentVar;
  n.var_id = id;
  n.ground = false;
  return make(std::move(n));
}

Term Term::dependent_var(int id) {
  if (id < 1) throw std::invalid_argument("variable id must be positive");
  Node n;
  n.kind = TermKind::kDependentVar;
  n.var_id = id;
  n.ground = false;
  return make(std::move(n));
}

Term Term::product(Term left, Term right) {
  Node n;
  n.kind = TermKind::kProduct;
  n.children = {std::move(left), std::move(right)};
  return make(std::move(n));
}

Term Term::inheritance(Term subject, Term predicate) {
  Node n;
  n.kind = TermKind::kInheritance;
  n.children = {std::move(subject), std::move(predicate)};
  return make(std::move(n));
}

Term Term::sequence(std::vector<Term> events) {
  if (events.size() < 2) {
    throw std::invalid_argument("a sequence needs at least two events");
  }
  Node n;
  n.kind = TermKind::kSequence;
  n.children = std::move(events);
  return make(std::move(n));
}

Term Term::conjunction(Term first, Term second) {
  Node n;
  n.kind = TermKind::kConjunction;
  n.children = {std::move(first), std::move(second)};
  return make(std::move(n));
}

Term Term::implication(ImplicationKind kind, Term antecedent,
                       Term consequent) {
  Node n;
  n.kind = TermKind::kImplication;
  n.implication = kind;
  n.children = {std::move(antecedent), std::move(consequent)};
  return make(std::move(n));
}

Term Term::operation(Term arguments, std::string name) {
  if (name.empty()) {
    throw std::invalid_argument("operator name must not be empty");
  }
  Node n;
  n.kind = TermKind::kOperation;
  n.name = std::move(name);
  n.children = {std::move(arguments)};
  return make(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.implication == y.implication &&
         x.name == y.name && x.var_id == y.var_id && x.children == y.children;
}

namespace {

void render(const Term& t, bool top, std::string& out);

const char* copula(ImplicationKind k) {
  return k == ImplicationKind::kPredictive ? " =/> " : " ==> ";
}

void render(const Term& t, bool top, std::string& out) {
  switch (t.kind()) {
    case TermKind::kAtom:
      out += t.name();
      return;
    case TermKind::kIndependentVar:
      out += '$';
      out += std::to_string(t.var_id());
      return;
    case TermKind::kDependentVar:
      out += '#';
      out += std::to_string(t.var_id());
      return;
    case TermKind::kProduct:
      out += '(';
      render(t.child(0), false, out);
      out += " * ";
      render(t.child(1), false, out);
      out += ')';
      return;
    case TermKind::kInheritance:
      out += '<';
      render(t.child(0), false, out);
      out += " --> ";
      render(t.child(1), false, out);
      out += '>';
      return;
    case TermKind::kOperation:
      out += '<';
      render(t.child(0), false, out);
      out += " --> ^";
      out += t.name();
      out += '>';
      return;
    case TermKind::kSequence: {
      out += '(';
      bool first = true;
      for (const Term& e : t.children()) {
        if (!first) out += " &/ ";
        first = false;
        render(e, false, out);
      }
      out += ')';
      return;
    }
    case TermKind::kConjunction:
      if (!top) out += '(';
      render(t.child(0), false, out);
      out += " && ";
      render(t.child(1), false, out);
      if (!top) out += ')';
      return;
    case TermKind::kImplication: {
      const bool predictive = t.is_predictive_implication();
      if (top && predictive) {
        render(t.child(0), false, out);
        out += copula(t.implication_kind());
        render(t.child(1), false, out);
        out += '>';
        return;
      }
      if (top && t.child(1).is_predictive_implication()) {
        render(t.child(0), false, out);
        out += copula(t.implication_kind());
        render(t.child(1), true, out);
        return;
      }
      out += '<';
      render(t.child(0), false, out);
      out += copula(t.implication_kind());
      render(t.child(1), false, out);
      out += '>';
      return;
    }
  }
}

}  // namespace

Term with_children(const Term& t, std::vector<Term> kids) {
  switch (t.kind()) {
    case TermKind::kProduct:
      return Term::product(std::move(kids[0]), std::move(kids[1]));
    case TermKind::kInheritance:
      return Term::inheritance(std::move(kids[0]), std::move(kids[1]));
    case TermKind::kSequence:
      return Term::sequence(std::move(kids));
    case TermKind::kConjunction:
      return Term::conjunction(std::move(kids[0]), std::move(kids[1]));
    case TermKind::kImplication:
      return Term::implication(t.implication_kind(), std::move(kids[0]),
                               std::move(kids[1]));
    case TermKind::kOperation:
      return Term::operation(std::move(kids[0]), t.name());
    default:
      return t;
  }
}

namespace {

struct Renumbering {
  std::map<int, int> independent;
  std::map<int, int> dependent;

  Term apply(const Term& t) {
    if (t.is_ground()) return t;
    if (t.kind() == TermKind::kIndependentVar) {
      auto [it, fresh] = independent.try_emplace(
          t.var_id(), static_cast<int>(independent.size()) + 1);
      return Term::independent_var(it->second);
    }
    if (t.kind() == TermKind::kDependentVar) {
      auto [it, fresh] = dependent.try_emplace(
          t.var_id(), static_cast<int>(dependent.size()) + 1);
      return Term::dependent_var(it->second);
    }
    std::vector<Term> kids;
    kids.reserve(t.children().size());
    for (const Term& c : t.children()) kids.push_back(apply(c));
    return with_children(t, std::move(kids));
  }
};

void collect_atoms(const Term& t, std::vector<Term>& out) {
  if (t.kind() == TermKind::kAtom) {
    out.push_back(t);
    return;
  }
  for (const Term& c : t.children()) collect_atoms(c, out);
}

}  // namespace

std::string to_string(const Term& term) {
  std::string out;
  render(term, true, out);
  return out;
}

std::string to_string_nested(const Term& term) {
  std::string out;
  render(term, false, out);
  return out;
}

Term canonicalize_variables(const Term& term) {
  Renumbering r;
  return r.apply(term);
}

std::vector<Term> atoms_of(const Term& term) {
  std::vector<Term> out;
  collect_atoms(term, out);
  return out;
}

bool is_atom(const Term& term, std::string_view name) {
  return term.kind() == TermKind::kAtom && term.name() == name;
}

}  // namespace narsrel

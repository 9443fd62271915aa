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

#ifndef NARSREL_TERM_HPP_
#define NARSREL_TERM_HPP_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace narsrel {

enum class TermKind {
  kAtom,
  kIndependentVar,  // $n
  kDependentVar,    // #n
  kProduct,         // (a * b)
  kInheritance,     // <s --> p>
  kSequence,        // (a &/ b &/ ...)
  kConjunction,     // (a && b)
  kImplication,     // <a ==> c> or <a =/> c>
  kOperation,       // <args --> ^op>
};

enum class ImplicationKind { kPlain, kPredictive };

/// Immutable Narsese term. Copies share structure; equality is structural.
///
/// Conjunctions keep their operand order. The engine always builds them in a
/// fixed order, so no commutative normalisation is applied.
class Term {
 public:
  static Term atom(std::string name);
  static Term independent_var(int id);
  static Term dependent_var(int id);
  static Term product(Term left, Term right);
  static Term inheritance(Term subject, Term predicate);
  static Term sequence(std::vector<Term> events);
  static Term conjunction(Term first, Term second);
  static Term implication(ImplicationKind kind, Term antecedent,
                          Term consequent);
  /// `name` excludes the leading '^'.
  static Term operation(Term arguments, std::string name);

  TermKind kind() const { return node_->kind; }
  ImplicationKind implication_kind() const { return node_->implication; }

  /// Atom text or operator name.
  const std::string& name() const { return node_->name; }
  int var_id() const { return node_->var_id; }
  std::span<const Term> children() const { return node_->children; }
  const Term& child(std::size_t i) const { return node_->children.at(i); }

  bool is_variable() const {
    return kind() == TermKind::kIndependentVar ||
           kind() == TermKind::kDependentVar;
  }
  bool is_ground() const { return node_->ground; }
  bool is_predictive_implication() const {
    return kind() == TermKind::kImplication &&
           implication_kind() == ImplicationKind::kPredictive;
  }

  /// Nesting depth; atoms and variables have depth 1.
  int depth() const { return node_->depth; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    TermKind kind = TermKind::kAtom;
    ImplicationKind implication = ImplicationKind::kPlain;
    std::string name;
    int var_id = 0;
    std::vector<Term> children;
    bool ground = true;
    int depth = 1;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Renders a term in the notation of the trial listings. At the outermost
/// level a conjunction drops its parentheses, a predictive implication drops
/// its opening bracket, and a plain implication whose consequent is a
/// predictive implication drops both of its brackets. Nested terms are always
/// fully bracketed.
std::string to_string(const Term& term);

/// Fully bracketed rendering, used for nested positions.
std::string to_string_nested(const Term& term);

/// Renumbers variables 1..k in first-occurrence order, independent and
/// dependent variables counted separately.
Term canonicalize_variables(const Term& term);

/// Same node kind as `t` over new children; leaves are returned unchanged.
Term with_children(const Term& t, std::vector<Term> children);

/// Every atom leaf in left-to-right order (operator names excluded).
std::vector<Term> atoms_of(const Term& term);

bool is_atom(const Term& term, std::string_view name);

}  // namespace narsrel

#endif  // NARSREL_TERM_HPP_

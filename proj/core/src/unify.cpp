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

#include "narsrel/unify.hpp"

#include <stdexcept>
#include <vector>

namespace narsrel {

namespace {

VarKey key_of(const Term& var) { return {var.kind(), var.var_id()}; }

bool match(const Term& pattern, const Term& ground, Substitution& s) {
  if (pattern.is_variable()) return s.bind(pattern, ground);
  if (pattern.kind() != ground.kind()) return false;
  switch (pattern.kind()) {
    case TermKind::kAtom:
      return pattern.name() == ground.name();
    case TermKind::kImplication:
      if (pattern.implication_kind() != ground.implication_kind()) return false;
      break;
    case TermKind::kOperation:
      if (pattern.name() != ground.name()) return false;
      break;
    default:
      break;
  }
  const auto pk = pattern.children();
  const auto gk = ground.children();
  if (pk.size() != gk.size()) return false;
  for (std::size_t i = 0; i < pk.size(); ++i) {
    if (!match(pk[i], gk[i], s)) return false;
  }
  return true;
}

}  // namespace

bool Substitution::bind(const Term& var, const Term& value) {
  if (!var.is_variable()) {
    throw std::invalid_argument("only variables can be bound");
  }
  if (!value.is_ground()) {
    throw std::invalid_argument("bindings must be ground");
  }
  auto [it, inserted] = bindings_.try_emplace(key_of(var), value);
  return inserted || it->second == value;
}

const Term* Substitution::lookup(const Term& var) const {
  const auto it = bindings_.find(key_of(var));
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (t.is_ground()) return t;
  if (t.is_variable()) {
    const Term* v = lookup(t);
    return v ? *v : t;
  }
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (const Term& c : t.children()) kids.push_back(apply(c));
  return with_children(t, std::move(kids));
}

std::optional<Substitution> unify(const Term& pattern, const Term& ground) {
  if (!ground.is_ground()) {
    throw std::invalid_argument("unify expects a ground target term");
  }
  Substitution s;
  if (!match(pattern, ground, s)) return std::nullopt;
  return s;
}

}  // namespace narsrel

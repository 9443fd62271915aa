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

#ifndef NARSREL_UNIFY_HPP_
#define NARSREL_UNIFY_HPP_

#include <map>
#include <optional>
#include <utility>

#include "narsrel/term.hpp"

namespace narsrel {

/// Variable key: (kind, id). Independent and dependent variables with the
/// same number are distinct.
using VarKey = std::pair<TermKind, int>;

/// Ground-only bindings, so applying a substitution is idempotent.
class Substitution {
 public:
  /// False if `var` is already bound to a different term. Throws
  /// std::invalid_argument if `value` is not ground.
  bool bind(const Term& var, const Term& value);

  const Term* lookup(const Term& var) const;
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::map<VarKey, Term>& bindings() const { return bindings_; }

  Term apply(const Term& t) const;

 private:
  std::map<VarKey, Term> bindings_;
};

/// One-sided matching of `pattern` against a ground term. Returns the unique
/// substitution with apply(pattern) == ground, or nothing.
std::optional<Substitution> unify(const Term& pattern, const Term& ground);

}  // namespace narsrel

#endif  // NARSREL_UNIFY_HPP_

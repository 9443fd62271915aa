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

#include <map>

#include <gtest/gtest.h>

#include "narsrel/narsese.hpp"
#include "narsrel/unify.hpp"
#include "common/term_gen.hpp"

namespace narsrel {
namespace {

using testing::TermGen;

void collect_vars(const Term& t, std::map<VarKey, Term>& out) {
  if (t.is_variable()) {
    out.emplace(VarKey{t.kind(), t.var_id()}, t);
    return;
  }
  for (const Term& c : t.children()) collect_vars(c, out);
}

TEST(Unify, SchemaPairBinds) {
  const auto s = unify(parse_term("<($1 * $2) --> (ocr * ocr)>"),
                       parse_term("<(X1 * Y1) --> (ocr * ocr)>"));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->size(), 2u);
  EXPECT_EQ(*s->lookup(Term::independent_var(1)), Term::atom("X1"));
  EXPECT_EQ(*s->lookup(Term::independent_var(2)), Term::atom("Y1"));
}

TEST(Unify, GroundPatternGivesEmptySubstitution) {
  const Term t = parse_term("<(X1 * Y1) --> SAME>");
  const auto s = unify(t, t);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->empty());
}

TEST(Unify, InconsistentRepeatedVariable) {
  EXPECT_FALSE(unify(parse_term("<($1 * $1) --> R>"),
                     parse_term("<(X1 * Y1) --> R>")));
  EXPECT_TRUE(unify(parse_term("<($1 * $1) --> R>"),
                    parse_term("<(X1 * X1) --> R>")));
}

TEST(Unify, DependentAndIndependentAreDistinct) {
  const auto s = unify(parse_term("<($1 * #1) --> R>"),
                       parse_term("<(X1 * Y1) --> R>"));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s->lookup(Term::dependent_var(1)), Term::atom("Y1"));
}

TEST(Unify, RejectsNonGroundTarget) {
  EXPECT_THROW(unify(parse_term("$1"), parse_term("$2")), std::invalid_argument);
}

TEST(Substitution, GroundOnlyAndConsistent) {
  Substitution s;
  EXPECT_THROW(s.bind(Term::independent_var(1), Term::independent_var(2)),
               std::invalid_argument);
  EXPECT_TRUE(s.bind(Term::independent_var(1), Term::atom("a")));
  EXPECT_TRUE(s.bind(Term::independent_var(1), Term::atom("a")));
  EXPECT_FALSE(s.bind(Term::independent_var(1), Term::atom("b")));
}

// Soundness and completeness over random schema instantiations.
TEST(Unify, SoundOnTenThousandInstantiations) {
  TermGen gen(2024);
  int with_vars = 0;
  for (int i = 0; i < 10000; ++i) {
    const Term pattern = gen.term(5);
    std::map<VarKey, Term> vars;
    collect_vars(pattern, vars);
    Substitution chosen;
    for (const auto& [key, v] : vars) {
      ASSERT_TRUE(chosen.bind(v, gen.term(3, /*vars=*/false)));
    }
    with_vars += !vars.empty();
    const Term ground = chosen.apply(pattern);
    ASSERT_TRUE(ground.is_ground());

    const auto s = unify(pattern, ground);
    ASSERT_TRUE(s.has_value()) << to_string(pattern) << " / " << to_string(ground);
    ASSERT_EQ(s->apply(pattern), ground);
    // Idempotent, and equal to the generating bindings on the pattern's vars.
    ASSERT_EQ(s->apply(s->apply(pattern)), s->apply(pattern));
    for (const auto& [key, v] : vars) {
      ASSERT_EQ(*s->lookup(v), *chosen.lookup(v));
    }
  }
  EXPECT_GT(with_vars, 5000);
}

TEST(Unify, NeverReturnsUnsoundSubstitution) {
  TermGen gen(99);
  for (int i = 0; i < 10000; ++i) {
    const Term pattern = gen.term(4);
    const Term ground = gen.term(4, /*vars=*/false);
    if (const auto s = unify(pattern, ground)) {
      ASSERT_EQ(s->apply(pattern), ground);
    }
  }
}

}  // namespace
}  // namespace narsrel

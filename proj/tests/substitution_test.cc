// Copyright 2026 The nomunify Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nomunify/substitution.h"

#include <gtest/gtest.h>

#include "support/generators.h"

namespace nomunify {
namespace {

const Atom a("a");
const Atom b("b");
const VarName X("X");
const VarName Y("Y");

TEST(SubstTest, CapturesUnderBinders) {
  const Subst s{{X, Term::atom(b)}};
  EXPECT_EQ(apply(s, Term::abs(a, Term::var(X))), Term::abs(a, Term::atom(b)));
  EXPECT_EQ(apply(Subst{{X, Term::atom(a)}}, Term::abs(a, Term::var(X))),
            Term::abs(a, Term::atom(a)));
}

TEST(SubstTest, SuspensionAppliesPermutationToBinding) {
  // [(a b)] • a = b
  EXPECT_EQ(apply(Subst{{X, Term::atom(a)}}, Term::susp(Permutation{{a, b}}, X)),
            Term::atom(b));
  EXPECT_EQ(apply(Subst{{X, Term::var(Y)}}, Term::susp(Permutation{{a, b}}, X)),
            Term::susp(Permutation{{a, b}}, Y));
}

TEST(SubstTest, UnboundVariablesUntouched) {
  const Term t = Term::pair(Term::var(Y), Term::susp(Permutation{{a, b}}, Y));
  EXPECT_EQ(apply(Subst{{X, Term::atom(a)}}, t), t);
  EXPECT_EQ(apply(Subst{}, t), t);
}

TEST(SubstTest, Compose) {
  const Subst s{{X, Term::atom(a)}};
  EXPECT_EQ(compose(s, Subst{}), s);
  EXPECT_EQ(compose(Subst{}, s), s);

  const Subst after{{Y, Term::atom(a)}};
  const Subst before{{X, Term::var(Y)}};
  const Subst composed = compose(after, before);
  EXPECT_EQ(composed, (Subst{{X, Term::atom(a)}, {Y, Term::atom(a)}}));

  const Term t = Term::pair(Term::var(X), Term::var(Y));
  const Term both = Term::pair(Term::atom(a), Term::atom(a));
  EXPECT_EQ(apply(composed, t), both);
  EXPECT_EQ(apply(after, apply(before, t)), both);
}

TEST(SubstTest, BeforeWinsForSharedDomain) {
  const Subst after{{X, Term::atom(b)}};
  const Subst before{{X, Term::atom(a)}};
  EXPECT_EQ(compose(after, before), before);
}

TEST(SubstTest, ApplyToProblems) {
  const Subst s{{X, Term::atom(b)}};
  const ProblemSet eq{Equational{Term::atom(a), Term::var(X)}};
  const ProblemSet eq_bound{Equational{Term::atom(a), Term::atom(b)}};
  const ProblemSet fr{Freshness{a, Term::susp(Permutation{{a, b}}, X)}};
  const ProblemSet fr_bound{Freshness{a, Term::atom(a)}};
  EXPECT_EQ(nomunify::apply(Subst{}, eq), eq);
  EXPECT_EQ(nomunify::apply(s, eq), eq_bound);
  EXPECT_EQ(nomunify::apply(s, fr), fr_bound);
}

TEST(SubstTest, DomainAndRange) {
  const Subst s{{X, Term::pair(Term::var(Y), Term::atom(a))}};
  EXPECT_EQ(s.domain(), (std::set<VarName>{X}));
  EXPECT_EQ(range_vars(s), (std::set<VarName>{Y}));
  EXPECT_EQ(atoms_of(s), (std::set<Atom>{a}));
}

class SubstPropertyTest : public ::testing::Test {
 protected:
  Subst random_subst() {
    Subst s;
    for (const VarName& x : gen.config().vars) {
      if (gen.coin(0.5)) s.bind(x, gen.term(3));
    }
    return s;
  }

  testing::Generator gen{4242};
};

TEST_F(SubstPropertyTest, Laws) {
  for (int i = 0; i < 2000; ++i) {
    const Subst s1 = random_subst();
    const Subst s2 = random_subst();
    const Term t = gen.term();
    const Permutation p = gen.perm();
    const Atom x = gen.atom();
    ASSERT_EQ(apply(s1, Term::abs(x, t)), Term::abs(x, apply(s1, t)));
    ASSERT_EQ(apply(s1, permute(p, t)), permute(p, apply(s1, t)));
    ASSERT_EQ(apply(compose(s2, s1), t), apply(s2, apply(s1, t)));
    ASSERT_EQ(compose(Subst{}, s1), s1);
    ASSERT_EQ(compose(s1, Subst{}), s1);
  }
}

}  // namespace
}  // namespace nomunify

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

#include "nomunify/syntax.h"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support/generators.h"

namespace nomunify {
namespace {

const Atom a("a");
const Atom b("b");
const Atom c("c");
const VarName X("X");
const VarName Y("Y");

TEST(ParseTermTest, Examples) {
  EXPECT_EQ(parse_term("a.<a, c>"),
            Term::abs(a, Term::pair(Term::atom(a), Term::atom(c))));
  EXPECT_EQ(parse_term("(a b)X"), Term::susp(Permutation{{a, b}}, X));
  EXPECT_EQ(parse_term("(a b)(b c)X"),
            Term::susp(Permutation{{a, b}, {b, c}}, X));
  EXPECT_EQ(parse_term("f <X, Y>"),
            Term::fun("f", Term::pair(Term::var(X), Term::var(Y))));
  EXPECT_EQ(parse_term("<>"), Term::unit());
  EXPECT_EQ(parse_term("X"), Term::var(X));
  EXPECT_EQ(parse_term("f a.b"), Term::fun("f", Term::abs(a, Term::atom(b))));
  EXPECT_EQ(parse_term("(f a)"), Term::fun("f", Term::atom(a)));
  EXPECT_EQ(parse_term("x'1"), Term::atom(Atom("x'1")));
  // Application is right-nested and a parenthesised swapping with no
  // variable after it is just a group.
  EXPECT_EQ(parse_term("a b c"),
            Term::fun("a", Term::fun("b", Term::atom(Atom("c")))));
  EXPECT_EQ(parse_term("(a b)"), Term::fun("a", Term::atom(b)));
}

TEST(ParseTermTest, Errors) {
  EXPECT_THROW(parse_term(""), ParseError);
  EXPECT_THROW(parse_term("<a, b"), ParseError);
  EXPECT_THROW(parse_term("(a b"), ParseError);
  EXPECT_THROW(parse_term("a."), ParseError);
  EXPECT_THROW(parse_term("(a b)c"), ParseError);
  EXPECT_THROW(parse_term("X Y"), ParseError);
  EXPECT_THROW(parse_term("X.a"), ParseError);
  EXPECT_THROW(parse_term("a $"), ParseError);
}

TEST(ParseProblemTest, Examples) {
  EXPECT_EQ(parse_problem("a.X =? b.X"),
            UnifProblem(Equational{Term::abs(a, Term::var(X)),
                                   Term::abs(b, Term::var(X))}));
  EXPECT_EQ(parse_problem("a #? (a b)X"),
            UnifProblem(Freshness{a, Term::susp(Permutation{{a, b}}, X)}));
  EXPECT_THROW(parse_problem("a"), ParseError);
  EXPECT_THROW(parse_problem("X #? a"), ParseError);
}

TEST(ParseProblemTest, FileWithCommentsAndBlankLines) {
  const ProblemSet ps = parse_problem_file(
      "-- binders\n"
      "a.<a, c> =? b.<X, c>\n"
      "\n"
      "  c #? X   -- trailing\n");
  EXPECT_EQ(ps, (ProblemSet{
                    Equational{parse_term("a.<a, c>"), parse_term("b.<X, c>")},
                    Freshness{c, Term::var(X)}}));
  EXPECT_TRUE(parse_problem_file("").empty());
  EXPECT_TRUE(parse_problem_file("-- nothing\n\n").empty());
}

TEST(ParseProblemTest, ErrorPosition) {
  try {
    parse_problem_file("a =? a\n\nb =? <c,\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(PrintTest, Examples) {
  EXPECT_EQ(to_string(parse_term("a.<a, c>")), "a.<a, c>");
  EXPECT_EQ(to_string(Term::susp(Permutation{{a, b}}, X)), "(a b)X");
  EXPECT_EQ(to_string(Term::var(X)), "X");
  EXPECT_EQ(to_string(FreshnessEnv{{b, X}, {a, X}}), "{a#X, b#X}");
  EXPECT_EQ(to_string(Subst{{X, Term::atom(b)}}), "[X := b]");
}

TEST(PrintTest, RoundTrip) {
  testing::Generator gen(31);
  for (int i = 0; i < 3000; ++i) {
    const Term t = gen.term();
    ASSERT_EQ(parse_term(to_string(t)), t) << to_string(t);
  }
}

TEST(FormatSolutionTest, Text) {
  EXPECT_EQ(format_solution(Solution{{}, Subst{{X, Term::atom(b)}}}),
            "NABLA = {}\nSIGMA = [X := b]");
  EXPECT_EQ(format_solution(Solution{FreshnessEnv{{a, X}, {b, X}}, {}}),
            "NABLA = {a#X, b#X}\nSIGMA = []");
  EXPECT_EQ(format_solution(UnifyError{UnifyError::Kind::kClash,
                                       Equational{Term::atom(a), Term::atom(b)}}),
            "FAIL Clash: a =? b");
}

TEST(FormatSolutionTest, Json) {
  const auto solved = nlohmann::json::parse(format_solution_json(
      Solution{FreshnessEnv{{a, X}}, Subst{{Y, Term::atom(b)}}}));
  EXPECT_EQ(solved["status"], "solved");
  EXPECT_EQ(solved["nabla"], nlohmann::json::parse(R"([["a", "X"]])"));
  EXPECT_EQ(solved["sigma"]["Y"], "b");
  EXPECT_TRUE(solved["error"].is_null());
  EXPECT_FALSE(solved.contains("trace"));

  const auto failed = nlohmann::json::parse(format_solution_json(UnifyError{
      UnifyError::Kind::kOccursCheck,
      Equational{Term::var(X), Term::fun("f", Term::var(X))}}));
  EXPECT_EQ(failed["status"], "fail");
  EXPECT_EQ(failed["error"]["kind"], "OccursCheck");
  EXPECT_EQ(failed["error"]["problem"], "X =? f X");
}

TEST(FormatStepTest, Trace) {
  std::vector<StepRecord> trace;
  const SolveResult r = solve(parse_problem_file("a.<a, c> =? b.<X, c>"),
                              [&](const StepRecord& s) { trace.push_back(s); });
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(format_step(trace[0]),
            "abs-diff: a.<a, c> =? b.<X, c> ==> "
            "<a, c> =? <(a b)X, c>, a #? <X, c>");
  EXPECT_EQ(format_step(trace[2]), "elim: a =? (a b)X ==> [X := b]");

  const auto j = nlohmann::json::parse(format_solution_json(r, &trace));
  ASSERT_EQ(j["trace"].size(), trace.size());
  EXPECT_EQ(j["trace"][0], format_step(trace[0]));
}

}  // namespace
}  // namespace nomunify

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

// Concrete syntax for terms and problem files.
//
//   term  := atom "." term            abstraction
//          | { "(" atom atom ")" } Var suspension, outermost swapping first
//          | "<>" | "<" term "," term ">"
//          | fsym term                function application, one argument
//          | atom
//          | "(" term ")"
//
// Atoms and function symbols start with a lowercase letter, variables with
// an uppercase letter. A problem file holds one problem per line, either
// `term =? term` or `atom #? term`; `--` starts a comment.

#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nomunify/judgements.h"
#include "nomunify/problem.h"
#include "nomunify/substitution.h"
#include "nomunify/term.h"
#include "nomunify/unifier.h"

namespace nomunify {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

Term parse_term(std::string_view input);
UnifProblem parse_problem(std::string_view input);
ProblemSet parse_problem_file(std::string_view input);

std::string to_string(const Term& t);
std::string to_string(const Permutation& p);
std::string to_string(const UnifProblem& p);
std::string to_string(const FreshnessEnv& env);
std::string to_string(const Subst& s);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Equational& p);
std::ostream& operator<<(std::ostream& os, const Freshness& p);
std::ostream& operator<<(std::ostream& os, const FreshnessEnv& env);
std::ostream& operator<<(std::ostream& os, const Subst& s);

/// `NABLA = {...}\nSIGMA = [...]` on success, `FAIL <kind>: <problem>` on
/// failure. No trailing newline.
std::string format_solution(const SolveResult& result);

/// The JSON rendering of a result. `trace`, when non-null, is included as
/// an array of formatted steps.
std::string format_solution_json(const SolveResult& result,
                                 const std::vector<StepRecord>* trace = nullptr);

/// `<rule>: <before> ==> <after>`
std::string format_step(const StepRecord& record);

}  // namespace nomunify

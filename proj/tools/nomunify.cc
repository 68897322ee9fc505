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

// nomunify solve <file> [--check] [--trace] [--json]
//
// Exit codes: 0 solved, 1 unsolvable, 2 input error, 3 the solution failed
// re-validation.

#include <fmt/core.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nomunify/oracle.h"
#include "nomunify/syntax.h"
#include "nomunify/unifier.h"

namespace {

constexpr int kSolved = 0;
constexpr int kUnsolvable = 1;
constexpr int kInputError = 2;
constexpr int kValidationFailure = 3;

bool read_input(const std::string& path, std::string& out) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    buf << in.rdbuf();
  }
  out = buf.str();
  return true;
}

struct SolveOptions {
  std::string file;
  bool check = false;
  bool trace = false;
  bool json = false;
};

int run_solve(const SolveOptions& opts) {
  std::string text;
  if (!read_input(opts.file, text)) {
    fmt::print(stderr, "nomunify: cannot read '{}'\n", opts.file);
    return kInputError;
  }
  nomunify::ProblemSet problems;
  try {
    problems = nomunify::parse_problem_file(text);
  } catch (const nomunify::ParseError& e) {
    fmt::print(stderr, "{}:{}:{}: parse error: {}\n", opts.file, e.line(),
               e.column(), e.message());
    return kInputError;
  }

  std::vector<nomunify::StepRecord> trace;
  nomunify::StepObserver observer;
  if (opts.trace) {
    observer = [&](const nomunify::StepRecord& r) { trace.push_back(r); };
  }
  const nomunify::SolveResult result = nomunify::solve(problems, observer);

  if (opts.json) {
    fmt::print("{}\n", nomunify::format_solution_json(
                           result, opts.trace ? &trace : nullptr));
  } else {
    for (const auto& r : trace) fmt::print("{}\n", nomunify::format_step(r));
    fmt::print("{}\n", nomunify::format_solution(result));
  }

  const auto* solution = std::get_if<nomunify::Solution>(&result);
  if (solution == nullptr) return kUnsolvable;
  if (opts.check && !nomunify::validate(*solution, problems)) {
    fmt::print(stderr, "nomunify: solution failed validation\n");
    return kValidationFailure;
  }
  return kSolved;
}

int run_canon(const std::string& input) {
  try {
    const nomunify::Term t = nomunify::parse_term(input);
    fmt::print("{}\n", nomunify::oracle::to_string(nomunify::oracle::canonicalize(t)));
  } catch (const nomunify::ParseError& e) {
    fmt::print(stderr, "<arg>:{}:{}: parse error: {}\n", e.line(), e.column(),
               e.message());
    return kInputError;
  } catch (const nomunify::oracle::NonGroundTermError& e) {
    fmt::print(stderr, "nomunify: {}\n", e.what());
    return kInputError;
  }
  return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nominal unification solver"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "Solve a problem file");
  solve->add_option("file", solve_opts.file, "Problem file ('-' for stdin)")
      ->required();
  solve->add_flag("--check", solve_opts.check,
                  "Re-validate the solution against the problems");
  solve->add_flag("--trace", solve_opts.trace, "Print every rewrite step");
  solve->add_flag("--json", solve_opts.json, "Machine-readable output");

  std::string canon_input;
  CLI::App* canon =
      app.add_subcommand("canon", "Print the nameless form of a ground term");
  canon->group("");
  canon->add_option("term", canon_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*solve) return run_solve(solve_opts);
  return run_canon(canon_input);
}

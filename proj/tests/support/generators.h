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

// Seeded random generators for property tests.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nomunify/judgements.h"
#include "nomunify/problem.h"
#include "nomunify/term.h"

namespace nomunify::testing {

struct GenConfig {
  std::vector<Atom> atoms = {Atom("a"), Atom("b"), Atom("c"), Atom("d")};
  std::vector<VarName> vars = {VarName("X"), VarName("Y"), VarName("Z")};
  std::vector<std::string> functions = {"f", "g"};
  int max_depth = 5;
  std::size_t max_swaps = 3;
  std::size_t max_env = 6;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed, GenConfig config = {});

  const GenConfig& config() const { return config_; }
  std::mt19937_64& rng() { return rng_; }

  bool coin(double p = 0.5);
  std::size_t below(std::size_t n);

  Atom atom();
  VarName var();
  Permutation perm();
  FreshnessEnv env();

  /// A term of depth at most `max_depth`.
  Term term(int max_depth);
  Term term() { return term(config_.max_depth); }
  Term ground_term(int max_depth);

  /// A permutation acting exactly like `p`, usually spelled differently.
  Permutation same_action(const Permutation& p);

  /// Perturbs suspended permutations without changing their action.
  Term weak_variant(const Term& t);

  /**
   * A term that is usually `≈`-equal to `t` under `env`: binders are
   * renamed to atoms fresh for the body, and suspended permutations are
   * extended by swappings of atoms `env` records fresh for the variable.
   * Callers still have to check the relation they need.
   */
  Term alpha_variant(const Term& t, const FreshnessEnv& env);

  /// Replaces random subterms of `t` with suspensions.
  Term generalize(const Term& t);

  /// A mix of equational and freshness problems, biased towards solvable.
  ProblemSet problem_set();

 private:
  Term leaf(bool allow_vars);
  Term term_impl(int depth, bool allow_vars);

  GenConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace nomunify::testing

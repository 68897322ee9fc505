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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nomunify/judgements.h"
#include "nomunify/problem.h"
#include "nomunify/substitution.h"
#include "nomunify/term.h"

namespace nomunify {

/// A solution `(env, subst)`: under `env`, `subst` makes every problem hold.
struct Solution {
  FreshnessEnv env;
  Subst subst;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct UnifyError {
  enum class Kind {
    kClash,             // constructor, atom or function symbol mismatch
    kOccursCheck,       // X against a non-suspension term containing X
    kFreshnessFailure,  // a #? a
  };

  Kind kind;
  UnifProblem problem;

  friend bool operator==(const UnifyError&, const UnifyError&) = default;
};

std::string_view to_string(UnifyError::Kind kind);

using SolveResult = std::variant<Solution, UnifyError>;

/// The unifier's working state: pending problems plus the partial solution.
struct UnifierState {
  ProblemSet pending;
  FreshnessEnv env;
  Subst subst;
};

/// One rewrite: which rule fired, on what, and what it produced.
struct StepRecord {
  std::string rule;
  UnifProblem before;
  std::vector<UnifProblem> produced;
  std::optional<Subst> binding;
  std::optional<FreshnessConstraint> constraint;
  std::optional<UnifyError::Kind> failure;
};

struct StepOutcome {
  StepRecord record;
  std::variant<UnifierState, UnifyError> next;
};

/**
 * Applies exactly one rewrite rule.
 *
 * The head problem is the first equational problem in the queue; once
 * none remain, the first freshness problem. New problems go to the back.
 * Requires at least one pending problem.
 */
StepOutcome step(UnifierState state);

using StepObserver = std::function<void(const StepRecord&)>;

/**
 * Solves a set of equational and freshness problems.
 *
 * Equational problems are run to exhaustion first, eliminating variables
 * as they become bound; freshness problems are then reduced to atomic
 * constraints. Never introduces atoms absent from the input. Always
 * terminates. `observer`, if set, sees every rewrite in order.
 */
SolveResult solve(const ProblemSet& problems,
                  const StepObserver& observer = nullptr);

bool occurs(const VarName& x, const Term& t);

/// Re-checks a solution against the original problems using the
/// judgements directly.
bool validate(const Solution& solution, const ProblemSet& original);

}  // namespace nomunify

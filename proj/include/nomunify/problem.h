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

#include <set>
#include <variant>
#include <vector>

#include "nomunify/term.h"

namespace nomunify {

/// `lhs ≈? rhs`
struct Equational {
  Term lhs;
  Term rhs;

  friend bool operator==(const Equational&, const Equational&) = default;
};

/// `atom #? target`
struct Freshness {
  Atom atom;
  Term target;

  friend bool operator==(const Freshness&, const Freshness&) = default;
};

using UnifProblem = std::variant<Equational, Freshness>;

/// Unification problems in queue order. Order only affects which rule
/// fires first, never whether the set is solvable.
using ProblemSet = std::vector<UnifProblem>;

std::set<Atom> atoms_of(const UnifProblem& p);
std::set<Atom> atoms_of(const ProblemSet& ps);
std::set<VarName> vars_of(const ProblemSet& ps);

}  // namespace nomunify

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

#include "nomunify/problem.h"

#include <variant>

namespace nomunify {

std::set<Atom> atoms_of(const UnifProblem& p) {
  if (const auto* eq = std::get_if<Equational>(&p)) {
    std::set<Atom> atoms = atoms_of(eq->lhs);
    atoms.merge(atoms_of(eq->rhs));
    return atoms;
  }
  const auto& fr = std::get<Freshness>(p);
  std::set<Atom> atoms = atoms_of(fr.target);
  atoms.insert(fr.atom);
  return atoms;
}

std::set<Atom> atoms_of(const ProblemSet& ps) {
  std::set<Atom> atoms;
  for (const UnifProblem& p : ps) atoms.merge(atoms_of(p));
  return atoms;
}

std::set<VarName> vars_of(const ProblemSet& ps) {
  std::set<VarName> vars;
  for (const UnifProblem& p : ps) {
    if (const auto* eq = std::get_if<Equational>(&p)) {
      vars.merge(vars_of(eq->lhs));
      vars.merge(vars_of(eq->rhs));
    } else {
      vars.merge(vars_of(std::get<Freshness>(p).target));
    }
  }
  return vars;
}

}  // namespace nomunify

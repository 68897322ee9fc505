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

#include <variant>

namespace nomunify {

std::optional<Term> Subst::lookup(const VarName& x) const {
  auto it = bindings_.find(x);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

std::set<VarName> Subst::domain() const {
  std::set<VarName> dom;
  for (const auto& [x, t] : bindings_) dom.insert(x);
  return dom;
}

Term apply(const Subst& s, const Term& t) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::kUnit:
    case Term::Kind::kAtom:
      return t;
    case Term::Kind::kPair:
      return Term::pair(apply(s, t.left()), apply(s, t.right()));
    case Term::Kind::kFun:
      return Term::fun(t.symbol(), apply(s, t.arg()));
    case Term::Kind::kAbs:
      return Term::abs(t.binder(), apply(s, t.body()));
    case Term::Kind::kSusp:
      if (auto bound = s.lookup(t.var_name())) return permute(t.perm(), *bound);
      return t;
  }
  return t;
}

UnifProblem apply(const Subst& s, const UnifProblem& p) {
  if (const auto* eq = std::get_if<Equational>(&p)) {
    return Equational{apply(s, eq->lhs), apply(s, eq->rhs)};
  }
  const auto& fr = std::get<Freshness>(p);
  return Freshness{fr.atom, apply(s, fr.target)};
}

ProblemSet apply(const Subst& s, const ProblemSet& ps) {
  ProblemSet out;
  out.reserve(ps.size());
  for (const UnifProblem& p : ps) out.push_back(apply(s, p));
  return out;
}

Subst compose(const Subst& after, const Subst& before) {
  Subst result;
  for (const auto& [x, t] : before) result.bind(x, apply(after, t));
  for (const auto& [x, t] : after) {
    if (!before.binds(x)) result.bind(x, t);
  }
  return result;
}

std::set<Atom> atoms_of(const Subst& s) {
  std::set<Atom> atoms;
  for (const auto& [x, t] : s) atoms.merge(atoms_of(t));
  return atoms;
}

std::set<VarName> range_vars(const Subst& s) {
  std::set<VarName> vars;
  for (const auto& [x, t] : s) vars.merge(vars_of(t));
  return vars;
}

}  // namespace nomunify

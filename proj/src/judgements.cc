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

#include "nomunify/judgements.h"

namespace nomunify {

bool fresh(const FreshnessEnv& env, const Atom& a, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kUnit:
      return true;
    case Term::Kind::kPair:
      return fresh(env, a, t.left()) && fresh(env, a, t.right());
    case Term::Kind::kFun:
      return fresh(env, a, t.arg());
    case Term::Kind::kAtom:
      return a != t.atom_value();
    case Term::Kind::kAbs:
      return a == t.binder() || fresh(env, a, t.body());
    case Term::Kind::kSusp:
      return env.contains(permute(inverse(t.perm()), a), t.var_name());
  }
  return false;
}

bool alpha_eq(const FreshnessEnv& env, const Term& lhs, const Term& rhs) {
  if (lhs.kind() != rhs.kind()) return false;
  switch (lhs.kind()) {
    case Term::Kind::kUnit:
      return true;
    case Term::Kind::kPair:
      return alpha_eq(env, lhs.left(), rhs.left()) &&
             alpha_eq(env, lhs.right(), rhs.right());
    case Term::Kind::kFun:
      return lhs.symbol() == rhs.symbol() &&
             alpha_eq(env, lhs.arg(), rhs.arg());
    case Term::Kind::kAtom:
      return lhs.atom_value() == rhs.atom_value();
    case Term::Kind::kAbs: {
      const Atom& a = lhs.binder();
      const Atom& b = rhs.binder();
      if (a == b) return alpha_eq(env, lhs.body(), rhs.body());
      return fresh(env, a, rhs.body()) &&
             alpha_eq(env, lhs.body(), permute(Permutation::swap(a, b),
                                               rhs.body()));
    }
    case Term::Kind::kSusp: {
      if (lhs.var_name() != rhs.var_name()) return false;
      for (const Atom& c : disagreement_set(lhs.perm(), rhs.perm())) {
        if (!env.contains(c, lhs.var_name())) return false;
      }
      return true;
    }
  }
  return false;
}

bool weak_eq(const Term& lhs, const Term& rhs) {
  if (lhs.kind() != rhs.kind()) return false;
  switch (lhs.kind()) {
    case Term::Kind::kUnit:
      return true;
    case Term::Kind::kPair:
      return weak_eq(lhs.left(), rhs.left()) &&
             weak_eq(lhs.right(), rhs.right());
    case Term::Kind::kFun:
      return lhs.symbol() == rhs.symbol() && weak_eq(lhs.arg(), rhs.arg());
    case Term::Kind::kAtom:
      return lhs.atom_value() == rhs.atom_value();
    case Term::Kind::kAbs:
      return lhs.binder() == rhs.binder() && weak_eq(lhs.body(), rhs.body());
    case Term::Kind::kSusp:
      return lhs.var_name() == rhs.var_name() &&
             disagreement_set(lhs.perm(), rhs.perm()).empty();
  }
  return false;
}

}  // namespace nomunify

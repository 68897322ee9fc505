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

#include <cstddef>
#include <initializer_list>
#include <set>
#include <utility>

#include "nomunify/term.h"

namespace nomunify {

/// A single constraint "atom must be fresh for whatever replaces var".
struct FreshnessConstraint {
  Atom atom;
  VarName var;

  friend bool operator==(const FreshnessConstraint&,
                         const FreshnessConstraint&) = default;
  friend auto operator<=>(const FreshnessConstraint&,
                          const FreshnessConstraint&) = default;
};

/// A finite set of freshness constraints, ordered atom-then-variable.
class FreshnessEnv {
 public:
  using const_iterator = std::set<FreshnessConstraint>::const_iterator;

  FreshnessEnv() = default;
  FreshnessEnv(std::initializer_list<FreshnessConstraint> constraints)
      : constraints_(constraints) {}

  bool contains(const Atom& a, const VarName& x) const {
    return constraints_.contains(FreshnessConstraint{a, x});
  }
  void insert(Atom a, VarName x) {
    constraints_.insert(FreshnessConstraint{std::move(a), std::move(x)});
  }

  bool empty() const { return constraints_.empty(); }
  std::size_t size() const { return constraints_.size(); }
  const_iterator begin() const { return constraints_.begin(); }
  const_iterator end() const { return constraints_.end(); }

  friend bool operator==(const FreshnessEnv&, const FreshnessEnv&) = default;

 private:
  std::set<FreshnessConstraint> constraints_;
};

/// Decides `env |- a # t`.
bool fresh(const FreshnessEnv& env, const Atom& a, const Term& t);

/**
 * Decides `env |- lhs ≈ rhs`.
 *
 * The rules are syntax-directed, so this is a single structural walk
 * with no backtracking. Abstractions with different binders `a.s` and
 * `b.s'` are equal when `a` is fresh for `s'` and `s ≈ (a b)•s'`; two
 * suspensions of the same variable are equal when every atom on which
 * their permutations disagree is recorded fresh for that variable.
 * Any other constructor mismatch is simply not derivable.
 */
bool alpha_eq(const FreshnessEnv& env, const Term& lhs, const Term& rhs);

/// Syntactic equality up to suspended permutations with an empty
/// disagreement set. Binders must match exactly.
bool weak_eq(const Term& lhs, const Term& rhs);

}  // namespace nomunify

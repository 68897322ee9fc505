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
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "nomunify/problem.h"
#include "nomunify/term.h"

namespace nomunify {

/**
 * A finite map from variables to terms.
 *
 * Application is capturing: it pushes under binders without renaming,
 * so `[X := b](a.X)` is `a.b`. Bindings iterate in variable-name order.
 */
class Subst {
 public:
  using Map = std::map<VarName, Term>;
  using const_iterator = Map::const_iterator;

  Subst() = default;
  Subst(std::initializer_list<Map::value_type> bindings)
      : bindings_(bindings) {}

  static Subst single(VarName x, Term t) {
    Subst s;
    s.bind(std::move(x), std::move(t));
    return s;
  }

  /// Adds or replaces the binding for `x`.
  void bind(VarName x, Term t) { bindings_.insert_or_assign(std::move(x), std::move(t)); }

  std::optional<Term> lookup(const VarName& x) const;
  bool binds(const VarName& x) const { return bindings_.contains(x); }

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const_iterator begin() const { return bindings_.begin(); }
  const_iterator end() const { return bindings_.end(); }

  std::set<VarName> domain() const;

  friend bool operator==(const Subst&, const Subst&) = default;

 private:
  Map bindings_;
};

Term apply(const Subst& s, const Term& t);
UnifProblem apply(const Subst& s, const UnifProblem& p);
ProblemSet apply(const Subst& s, const ProblemSet& ps);

/// The substitution that acts like `before` followed by `after`.
Subst compose(const Subst& after, const Subst& before);

std::set<Atom> atoms_of(const Subst& s);

/// Variables occurring in any bound term.
std::set<VarName> range_vars(const Subst& s);

}  // namespace nomunify

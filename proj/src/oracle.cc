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

#include "nomunify/oracle.h"

#include <fmt/format.h>

#include <utility>

namespace nomunify::oracle {

namespace {

// `binders` holds enclosing binders, innermost last.
CanonicalTerm canonicalize(const Term& t, std::vector<Atom>& binders) {
  CanonicalTerm c;
  switch (t.kind()) {
    case Term::Kind::kUnit:
      c.kind = CanonicalTerm::Kind::kUnit;
      return c;
    case Term::Kind::kPair:
      c.kind = CanonicalTerm::Kind::kPair;
      c.children.push_back(canonicalize(t.left(), binders));
      c.children.push_back(canonicalize(t.right(), binders));
      return c;
    case Term::Kind::kFun:
      c.kind = CanonicalTerm::Kind::kFun;
      c.name = t.symbol();
      c.children.push_back(canonicalize(t.arg(), binders));
      return c;
    case Term::Kind::kAtom:
      for (std::size_t depth = 0; depth < binders.size(); ++depth) {
        if (binders[binders.size() - 1 - depth] == t.atom_value()) {
          c.kind = CanonicalTerm::Kind::kIndex;
          c.index = depth;
          return c;
        }
      }
      c.kind = CanonicalTerm::Kind::kFreeAtom;
      c.name = t.atom_value().name();
      return c;
    case Term::Kind::kAbs:
      c.kind = CanonicalTerm::Kind::kAbs;
      binders.push_back(t.binder());
      c.children.push_back(canonicalize(t.body(), binders));
      binders.pop_back();
      return c;
    case Term::Kind::kSusp:
      throw NonGroundTermError(fmt::format(
          "cannot canonicalize non-ground term (variable {})",
          t.var_name().name()));
  }
  return c;
}

std::vector<Permutation> small_permutations(const std::vector<Atom>& atoms) {
  std::vector<Swapping> swappings;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i; j < atoms.size(); ++j) {
      swappings.push_back(Swapping{atoms[i], atoms[j]});
    }
  }
  std::vector<Permutation> perms{Permutation{}};
  for (const Swapping& s : swappings) perms.push_back(Permutation{s});
  for (const Swapping& s : swappings) {
    for (const Swapping& s2 : swappings) perms.push_back(Permutation{s, s2});
  }
  return perms;
}

}  // namespace

CanonicalTerm canonicalize(const Term& t) {
  std::vector<Atom> binders;
  return canonicalize(t, binders);
}

bool ground_alpha_eq(const Term& lhs, const Term& rhs) {
  return canonicalize(lhs) == canonicalize(rhs);
}

std::string to_string(const CanonicalTerm& c) {
  switch (c.kind) {
    case CanonicalTerm::Kind::kUnit:
      return "<>";
    case CanonicalTerm::Kind::kPair:
      return fmt::format("<{}, {}>", to_string(c.children[0]),
                         to_string(c.children[1]));
    case CanonicalTerm::Kind::kFun:
      return fmt::format("{} {}", c.name, to_string(c.children[0]));
    case CanonicalTerm::Kind::kFreeAtom:
      return c.name;
    case CanonicalTerm::Kind::kIndex:
      return fmt::format("#{}", c.index);
    case CanonicalTerm::Kind::kAbs:
      return fmt::format("\\.{}", to_string(c.children[0]));
  }
  return "?";
}

std::vector<Term> enumerate_terms(std::size_t max_size,
                                  const EnumerationAlphabet& alphabet) {
  if (max_size == 0) throw std::invalid_argument("max_size must be at least 1");
  // by_size[n] holds every term of exactly n constructors.
  std::vector<std::vector<Term>> by_size(max_size + 1);
  auto& leaves = by_size[1];
  leaves.push_back(Term::unit());
  for (const Atom& a : alphabet.atoms) leaves.push_back(Term::atom(a));
  if (!alphabet.vars.empty()) {
    const std::vector<Permutation> perms = small_permutations(alphabet.atoms);
    for (const VarName& x : alphabet.vars) {
      for (const Permutation& p : perms) leaves.push_back(Term::susp(p, x));
    }
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    auto& out = by_size[n];
    for (std::size_t left = 1; left + 1 < n; ++left) {
      for (const Term& l : by_size[left]) {
        for (const Term& r : by_size[n - 1 - left]) {
          out.push_back(Term::pair(l, r));
        }
      }
    }
    for (const std::string& f : alphabet.functions) {
      for (const Term& t : by_size[n - 1]) out.push_back(Term::fun(f, t));
    }
    for (const Atom& a : alphabet.atoms) {
      for (const Term& t : by_size[n - 1]) out.push_back(Term::abs(a, t));
    }
  }
  std::vector<Term> all;
  for (auto& terms : by_size) {
    all.insert(all.end(), std::make_move_iterator(terms.begin()),
               std::make_move_iterator(terms.end()));
  }
  return all;
}

}  // namespace nomunify::oracle

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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nomunify {

/**
 * A name that can be bound by an abstraction and swapped by a permutation.
 *
 * Atoms are never substituted. They live in a namespace disjoint from
 * variables; the two are distinct types so they cannot be confused.
 */
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

/// An unknown standing for a term; the only thing substitution replaces.
class VarName {
 public:
  explicit VarName(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const VarName&, const VarName&) = default;
  friend auto operator<=>(const VarName&, const VarName&) = default;

 private:
  std::string name_;
};

/// The transposition exchanging two atoms. Both atoms may be equal.
struct Swapping {
  Atom first;
  Atom second;

  friend bool operator==(const Swapping&, const Swapping&) = default;
  friend auto operator<=>(const Swapping&, const Swapping&) = default;
};

/**
 * A permutation represented as a list of swappings.
 *
 * The front of the list is the outermost swapping, i.e. the one applied
 * last. The representation is never normalized: `[(a a)]` and `[]` are
 * different values even though they act identically. Use
 * disagreement_set() to compare permutations by their action.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Swapping> swaps) : swaps_(std::move(swaps)) {}
  Permutation(std::initializer_list<Swapping> swaps) : swaps_(swaps) {}

  static Permutation swap(Atom a, Atom b) {
    return Permutation{Swapping{std::move(a), std::move(b)}};
  }

  const std::vector<Swapping>& swaps() const { return swaps_; }
  bool is_empty() const { return swaps_.empty(); }
  std::size_t size() const { return swaps_.size(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Swapping> swaps_;
};

class Term;

namespace term_node {

struct Unit {};
struct Pair;
struct Fun;
struct AtomRef;
struct Abs;
struct Susp;

}  // namespace term_node

/**
 * An immutable nominal term.
 *
 * Terms are cheap to copy: subtrees are shared. Equality is plain
 * syntactic equality; there is no quotienting modulo renaming of binders.
 * Every variable occurrence is a suspension; a bare variable is a
 * suspension under the identity permutation.
 */
class Term {
 public:
  enum class Kind { kUnit, kPair, kFun, kAtom, kAbs, kSusp };

  /// Default-constructs the unit term.
  Term();

  static Term unit();
  static Term pair(Term left, Term right);
  static Term fun(std::string symbol, Term arg);
  static Term atom(Atom a);
  static Term abs(Atom binder, Term body);
  static Term susp(Permutation perm, VarName var);
  static Term var(VarName var) { return susp(Permutation{}, std::move(var)); }

  Kind kind() const;

  bool is_unit() const { return kind() == Kind::kUnit; }
  bool is_pair() const { return kind() == Kind::kPair; }
  bool is_fun() const { return kind() == Kind::kFun; }
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_abs() const { return kind() == Kind::kAbs; }
  bool is_susp() const { return kind() == Kind::kSusp; }

  // Accessors below require the matching kind.
  const Term& left() const;
  const Term& right() const;
  const std::string& symbol() const;
  const Term& arg() const;
  const Atom& atom_value() const;
  const Atom& binder() const;
  const Term& body() const;
  const Permutation& perm() const;
  const VarName& var_name() const;

  /// Number of constructors in the term (permutations do not count).
  std::size_t size() const;

  friend bool operator==(const Term& lhs, const Term& rhs);

 private:
  using Node = std::variant<term_node::Unit, term_node::Pair, term_node::Fun,
                            term_node::AtomRef, term_node::Abs,
                            term_node::Susp>;

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace term_node {

struct Pair {
  Term left;
  Term right;
};

struct Fun {
  std::string symbol;
  Term arg;
};

struct AtomRef {
  Atom atom;
};

struct Abs {
  Atom binder;
  Term body;
};

struct Susp {
  Permutation perm;
  VarName var;
};

}  // namespace term_node

// Permutation algebra.

/// The action of a permutation on an atom.
Atom permute(const Permutation& p, const Atom& a);

/// Composition by concatenation: `permute(compose(p, q), x) ==
/// permute(p, permute(q, x))`.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// List reversal.
Permutation inverse(const Permutation& p);

/// Atoms mentioned anywhere in the permutation.
std::set<Atom> support(const Permutation& p);

/**
 * The atoms on which `p` and `q` act differently.
 *
 * Only atoms mentioned in either permutation can disagree, so the result
 * is computed over their joint support.
 */
std::set<Atom> disagreement_set(const Permutation& p, const Permutation& q);

/// Pushes a permutation into a term; binders are permuted as well, and
/// the permutation is suspended in front of variables.
Term permute(const Permutation& p, const Term& t);

/// Every atom in `t`: binders, atom terms and atoms inside suspensions.
std::set<Atom> atoms_of(const Term& t);

std::set<VarName> vars_of(const Term& t);

}  // namespace nomunify

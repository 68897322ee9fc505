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

// Reference semantics for ground terms, independent of the judgements:
// nameless (de Bruijn style) canonical forms and an exhaustive small-term
// enumerator for differential testing.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomunify/term.h"

namespace nomunify::oracle {

/// A ground term with every bound atom replaced by the distance to its
/// binder. Free atoms keep their names.
struct CanonicalTerm {
  enum class Kind { kUnit, kPair, kFun, kFreeAtom, kIndex, kAbs };

  Kind kind = Kind::kUnit;
  std::string name;        // function symbol or free atom
  std::size_t index = 0;   // kIndex only
  std::vector<CanonicalTerm> children;

  friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
};

class NonGroundTermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws NonGroundTermError if `t` contains a suspension.
CanonicalTerm canonicalize(const Term& t);

bool ground_alpha_eq(const Term& lhs, const Term& rhs);

std::string to_string(const CanonicalTerm& c);

struct EnumerationAlphabet {
  std::vector<Atom> atoms;
  std::vector<VarName> vars;
  std::vector<std::string> functions = {"f"};
};

/**
 * Every term with at most `max_size` constructors over the alphabet, in a
 * deterministic order (by size, then constructor, then components).
 *
 * Suspensions range over all permutations of at most two swappings
 * `(x y)` with `x` not after `y` in `alphabet.atoms`, so `(a a)` is
 * included. Permutation length does not count towards size.
 */
std::vector<Term> enumerate_terms(std::size_t max_size,
                                  const EnumerationAlphabet& alphabet);

}  // namespace nomunify::oracle

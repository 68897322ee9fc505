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

#include "nomunify/term.h"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace nomunify {

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw std::invalid_argument("atom name must be non-empty");
}

VarName::VarName(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw std::invalid_argument("variable name must be non-empty");
  }
}

namespace {

template <typename T>
const T& expect(const auto& node, const char* what) {
  const T* p = std::get_if<T>(&node);
  if (p == nullptr) {
    throw std::logic_error(std::string("term is not ") + what);
  }
  return *p;
}

}  // namespace

Term::Term() : Term(unit()) {}

Term Term::unit() {
  static const std::shared_ptr<const Node> kUnit =
      std::make_shared<const Node>(term_node::Unit{});
  return Term(kUnit);
}

Term Term::pair(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      term_node::Pair{std::move(left), std::move(right)}));
}

Term Term::fun(std::string symbol, Term arg) {
  if (symbol.empty()) {
    throw std::invalid_argument("function symbol must be non-empty");
  }
  return Term(std::make_shared<const Node>(
      term_node::Fun{std::move(symbol), std::move(arg)}));
}

Term Term::atom(Atom a) {
  return Term(std::make_shared<const Node>(term_node::AtomRef{std::move(a)}));
}

Term Term::abs(Atom binder, Term body) {
  return Term(std::make_shared<const Node>(
      term_node::Abs{std::move(binder), std::move(body)}));
}

Term Term::susp(Permutation perm, VarName var) {
  return Term(std::make_shared<const Node>(
      term_node::Susp{std::move(perm), std::move(var)}));
}

Term::Kind Term::kind() const { return static_cast<Kind>(node_->index()); }

const Term& Term::left() const {
  return expect<term_node::Pair>(*node_, "a pair").left;
}
const Term& Term::right() const {
  return expect<term_node::Pair>(*node_, "a pair").right;
}
const std::string& Term::symbol() const {
  return expect<term_node::Fun>(*node_, "a function application").symbol;
}
const Term& Term::arg() const {
  return expect<term_node::Fun>(*node_, "a function application").arg;
}
const Atom& Term::atom_value() const {
  return expect<term_node::AtomRef>(*node_, "an atom").atom;
}
const Atom& Term::binder() const {
  return expect<term_node::Abs>(*node_, "an abstraction").binder;
}
const Term& Term::body() const {
  return expect<term_node::Abs>(*node_, "an abstraction").body;
}
const Permutation& Term::perm() const {
  return expect<term_node::Susp>(*node_, "a suspension").perm;
}
const VarName& Term::var_name() const {
  return expect<term_node::Susp>(*node_, "a suspension").var;
}

std::size_t Term::size() const {
  switch (kind()) {
    case Kind::kUnit:
    case Kind::kAtom:
    case Kind::kSusp:
      return 1;
    case Kind::kPair:
      return 1 + left().size() + right().size();
    case Kind::kFun:
      return 1 + arg().size();
    case Kind::kAbs:
      return 1 + body().size();
  }
  return 1;
}

bool operator==(const Term& lhs, const Term& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.kind() != rhs.kind()) return false;
  switch (lhs.kind()) {
    case Term::Kind::kUnit:
      return true;
    case Term::Kind::kPair:
      return lhs.left() == rhs.left() && lhs.right() == rhs.right();
    case Term::Kind::kFun:
      return lhs.symbol() == rhs.symbol() && lhs.arg() == rhs.arg();
    case Term::Kind::kAtom:
      return lhs.atom_value() == rhs.atom_value();
    case Term::Kind::kAbs:
      return lhs.binder() == rhs.binder() && lhs.body() == rhs.body();
    case Term::Kind::kSusp:
      return lhs.var_name() == rhs.var_name() && lhs.perm() == rhs.perm();
  }
  return false;
}

Atom permute(const Permutation& p, const Atom& a) {
  // The last swapping is innermost, so it acts first.
  const Atom* current = &a;
  for (auto it = p.swaps().rbegin(); it != p.swaps().rend(); ++it) {
    if (*current == it->first) {
      current = &it->second;
    } else if (*current == it->second) {
      current = &it->first;
    }
  }
  return *current;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  std::vector<Swapping> swaps;
  swaps.reserve(outer.size() + inner.size());
  swaps.insert(swaps.end(), outer.swaps().begin(), outer.swaps().end());
  swaps.insert(swaps.end(), inner.swaps().begin(), inner.swaps().end());
  return Permutation(std::move(swaps));
}

Permutation inverse(const Permutation& p) {
  return Permutation(
      std::vector<Swapping>(p.swaps().rbegin(), p.swaps().rend()));
}

std::set<Atom> support(const Permutation& p) {
  std::set<Atom> atoms;
  for (const Swapping& s : p.swaps()) {
    atoms.insert(s.first);
    atoms.insert(s.second);
  }
  return atoms;
}

std::set<Atom> disagreement_set(const Permutation& p, const Permutation& q) {
  std::set<Atom> candidates = support(p);
  candidates.merge(support(q));
  std::set<Atom> result;
  for (const Atom& a : candidates) {
    if (permute(p, a) != permute(q, a)) result.insert(a);
  }
  return result;
}

Term permute(const Permutation& p, const Term& t) {
  if (p.is_empty()) return t;
  switch (t.kind()) {
    case Term::Kind::kUnit:
      return t;
    case Term::Kind::kPair:
      return Term::pair(permute(p, t.left()), permute(p, t.right()));
    case Term::Kind::kFun:
      return Term::fun(t.symbol(), permute(p, t.arg()));
    case Term::Kind::kAtom:
      return Term::atom(permute(p, t.atom_value()));
    case Term::Kind::kAbs:
      return Term::abs(permute(p, t.binder()), permute(p, t.body()));
    case Term::Kind::kSusp:
      return Term::susp(compose(p, t.perm()), t.var_name());
  }
  return t;
}

namespace {

void collect_atoms(const Term& t, std::set<Atom>& out) {
  switch (t.kind()) {
    case Term::Kind::kUnit:
      return;
    case Term::Kind::kPair:
      collect_atoms(t.left(), out);
      collect_atoms(t.right(), out);
      return;
    case Term::Kind::kFun:
      collect_atoms(t.arg(), out);
      return;
    case Term::Kind::kAtom:
      out.insert(t.atom_value());
      return;
    case Term::Kind::kAbs:
      out.insert(t.binder());
      collect_atoms(t.body(), out);
      return;
    case Term::Kind::kSusp:
      out.merge(support(t.perm()));
      return;
  }
}

void collect_vars(const Term& t, std::set<VarName>& out) {
  switch (t.kind()) {
    case Term::Kind::kUnit:
    case Term::Kind::kAtom:
      return;
    case Term::Kind::kPair:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
      return;
    case Term::Kind::kFun:
      collect_vars(t.arg(), out);
      return;
    case Term::Kind::kAbs:
      collect_vars(t.body(), out);
      return;
    case Term::Kind::kSusp:
      out.insert(t.var_name());
      return;
  }
}

}  // namespace

std::set<Atom> atoms_of(const Term& t) {
  std::set<Atom> out;
  collect_atoms(t, out);
  return out;
}

std::set<VarName> vars_of(const Term& t) {
  std::set<VarName> out;
  collect_vars(t, out);
  return out;
}

}  // namespace nomunify

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

#include "nomunify/unifier.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nomunify {

std::string_view to_string(UnifyError::Kind kind) {
  switch (kind) {
    case UnifyError::Kind::kClash:
      return "Clash";
    case UnifyError::Kind::kOccursCheck:
      return "OccursCheck";
    case UnifyError::Kind::kFreshnessFailure:
      return "FreshnessFailure";
  }
  return "Unknown";
}

bool occurs(const VarName& x, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kUnit:
    case Term::Kind::kAtom:
      return false;
    case Term::Kind::kPair:
      return occurs(x, t.left()) || occurs(x, t.right());
    case Term::Kind::kFun:
      return occurs(x, t.arg());
    case Term::Kind::kAbs:
      return occurs(x, t.body());
    case Term::Kind::kSusp:
      return t.var_name() == x;
  }
  return false;
}

namespace {

class Rewriter {
 public:
  Rewriter(UnifierState state, UnifProblem head)
      : state_(std::move(state)) {
    record_.before = std::move(head);
  }

  StepOutcome run() {
    if (const auto* eq = std::get_if<Equational>(&record_.before)) {
      return equational(eq->lhs, eq->rhs);
    }
    const auto& fr = std::get<Freshness>(record_.before);
    return freshness(fr.atom, fr.target);
  }

 private:
  StepOutcome emit(std::string rule, std::vector<UnifProblem> produced = {}) {
    record_.rule = std::move(rule);
    state_.pending.insert(state_.pending.end(), produced.begin(),
                          produced.end());
    record_.produced = std::move(produced);
    return StepOutcome{std::move(record_), std::move(state_)};
  }

  StepOutcome fail(std::string rule, UnifyError::Kind kind) {
    record_.rule = std::move(rule);
    record_.failure = kind;
    UnifyError error{kind, record_.before};
    return StepOutcome{std::move(record_), std::move(error)};
  }

  StepOutcome equational(const Term& lhs, const Term& rhs) {
    if (lhs.is_susp() && rhs.is_susp() && lhs.var_name() == rhs.var_name()) {
      std::vector<UnifProblem> produced;
      for (const Atom& c : disagreement_set(lhs.perm(), rhs.perm())) {
        produced.push_back(Freshness{c, Term::var(lhs.var_name())});
      }
      return emit("susp-same", std::move(produced));
    }
    if (lhs.is_susp()) return eliminate(lhs, rhs);
    if (rhs.is_susp()) return eliminate(rhs, lhs);
    if (lhs.kind() != rhs.kind()) return fail("clash", UnifyError::Kind::kClash);

    switch (lhs.kind()) {
      case Term::Kind::kUnit:
        return emit("unit");
      case Term::Kind::kPair:
        return emit("pair", {Equational{lhs.left(), rhs.left()},
                             Equational{lhs.right(), rhs.right()}});
      case Term::Kind::kFun:
        if (lhs.symbol() != rhs.symbol()) {
          return fail("clash", UnifyError::Kind::kClash);
        }
        return emit("fun", {Equational{lhs.arg(), rhs.arg()}});
      case Term::Kind::kAtom:
        if (lhs.atom_value() != rhs.atom_value()) {
          return fail("clash", UnifyError::Kind::kClash);
        }
        return emit("atom");
      case Term::Kind::kAbs: {
        const Atom& a = lhs.binder();
        const Atom& b = rhs.binder();
        if (a == b) {
          return emit("abs-same", {Equational{lhs.body(), rhs.body()}});
        }
        return emit(
            "abs-diff",
            {Equational{lhs.body(), permute(Permutation::swap(a, b), rhs.body())},
             Freshness{a, rhs.body()}});
      }
      case Term::Kind::kSusp:
        break;
    }
    throw std::logic_error("unreachable equational case");
  }

  // `susp` is a suspension pi·X; `other` is anything but a suspension of X.
  StepOutcome eliminate(const Term& susp, const Term& other) {
    const VarName& x = susp.var_name();
    if (occurs(x, other)) {
      return fail("occurs-check", UnifyError::Kind::kOccursCheck);
    }
    Subst binding = Subst::single(x, permute(inverse(susp.perm()), other));
    state_.pending = nomunify::apply(binding, state_.pending);
    state_.subst = compose(binding, state_.subst);
    record_.binding = std::move(binding);
    return emit("elim");
  }

  StepOutcome freshness(const Atom& a, const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kUnit:
        return emit("fresh-unit");
      case Term::Kind::kPair:
        return emit("fresh-pair",
                    {Freshness{a, t.left()}, Freshness{a, t.right()}});
      case Term::Kind::kFun:
        return emit("fresh-fun", {Freshness{a, t.arg()}});
      case Term::Kind::kAtom:
        if (a == t.atom_value()) {
          return fail("fresh-fail", UnifyError::Kind::kFreshnessFailure);
        }
        return emit("fresh-atom");
      case Term::Kind::kAbs:
        if (a == t.binder()) return emit("fresh-abs-same");
        return emit("fresh-abs-diff", {Freshness{a, t.body()}});
      case Term::Kind::kSusp: {
        FreshnessConstraint c{permute(inverse(t.perm()), a), t.var_name()};
        state_.env.insert(c.atom, c.var);
        record_.constraint = std::move(c);
        return emit("fresh-susp");
      }
    }
    throw std::logic_error("unreachable freshness case");
  }

  UnifierState state_;
  StepRecord record_;
};

}  // namespace

StepOutcome step(UnifierState state) {
  if (state.pending.empty()) {
    throw std::invalid_argument("step requires a pending problem");
  }
  auto head = std::find_if(
      state.pending.begin(), state.pending.end(),
      [](const UnifProblem& p) { return std::holds_alternative<Equational>(p); });
  if (head == state.pending.end()) head = state.pending.begin();
  UnifProblem problem = std::move(*head);
  state.pending.erase(head);
  return Rewriter(std::move(state), std::move(problem)).run();
}

SolveResult solve(const ProblemSet& problems, const StepObserver& observer) {
  UnifierState state{problems, {}, {}};
  while (!state.pending.empty()) {
    StepOutcome outcome = step(std::move(state));
    if (observer) observer(outcome.record);
    if (auto* error = std::get_if<UnifyError>(&outcome.next)) {
      return std::move(*error);
    }
    state = std::get<UnifierState>(std::move(outcome.next));
  }
  return Solution{std::move(state.env), std::move(state.subst)};
}

bool validate(const Solution& solution, const ProblemSet& original) {
  for (const UnifProblem& p : original) {
    if (const auto* eq = std::get_if<Equational>(&p)) {
      if (!alpha_eq(solution.env, apply(solution.subst, eq->lhs),
                    apply(solution.subst, eq->rhs))) {
        return false;
      }
    } else {
      const auto& fr = std::get<Freshness>(p);
      if (!fresh(solution.env, fr.atom, apply(solution.subst, fr.target))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace nomunify

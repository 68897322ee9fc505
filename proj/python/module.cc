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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nomunify/judgements.h"
#include "nomunify/oracle.h"
#include "nomunify/syntax.h"
#include "nomunify/unifier.h"

namespace py = pybind11;

namespace nomunify {
namespace {

using SwapList = std::vector<std::pair<std::string, std::string>>;
using ConstraintList = std::vector<std::pair<std::string, std::string>>;

Permutation to_permutation(const SwapList& swaps) {
  std::vector<Swapping> out;
  out.reserve(swaps.size());
  for (const auto& [a, b] : swaps) out.push_back(Swapping{Atom(a), Atom(b)});
  return Permutation(std::move(out));
}

FreshnessEnv to_env(const ConstraintList& constraints) {
  FreshnessEnv env;
  for (const auto& [a, x] : constraints) env.insert(Atom(a), VarName(x));
  return env;
}

std::set<std::string> names(const std::set<Atom>& atoms) {
  std::set<std::string> out;
  for (const Atom& a : atoms) out.insert(a.name());
  return out;
}

const char* kind_name(Term::Kind kind) {
  switch (kind) {
    case Term::Kind::kUnit:
      return "unit";
    case Term::Kind::kPair:
      return "pair";
    case Term::Kind::kFun:
      return "fun";
    case Term::Kind::kAtom:
      return "atom";
    case Term::Kind::kAbs:
      return "abs";
    case Term::Kind::kSusp:
      return "susp";
  }
  return "?";
}

py::dict result_to_dict(const SolveResult& result, const ProblemSet& problems) {
  py::dict d;
  if (const auto* sol = std::get_if<Solution>(&result)) {
    ConstraintList nabla;
    for (const auto& c : sol->env) nabla.emplace_back(c.atom.name(), c.var.name());
    py::dict sigma;
    for (const auto& [x, t] : sol->subst) sigma[py::str(x.name())] = py::cast(t);
    d["status"] = "solved";
    d["nabla"] = nabla;
    d["sigma"] = sigma;
    d["error"] = py::none();
    d["valid"] = validate(*sol, problems);
  } else {
    const auto& err = std::get<UnifyError>(result);
    d["status"] = "fail";
    d["nabla"] = py::list();
    d["sigma"] = py::dict();
    py::dict e;
    e["kind"] = std::string(to_string(err.kind));
    e["problem"] = to_string(err.problem);
    d["error"] = e;
  }
  d["text"] = format_solution(result);
  return d;
}

}  // namespace
}  // namespace nomunify

PYBIND11_MODULE(_nomunify, m) {
  using namespace nomunify;
  m.doc() = "Nominal unification: freshness, alpha-equivalence and solving";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Term>(m, "Term")
      .def(py::init([](const std::string& text) { return parse_term(text); }),
           py::arg("text"))
      .def_property_readonly("kind",
                             [](const Term& t) { return kind_name(t.kind()); })
      .def("size", &Term::size)
      .def("atoms", [](const Term& t) { return names(atoms_of(t)); })
      .def("vars",
           [](const Term& t) {
             std::set<std::string> out;
             for (const VarName& x : vars_of(t)) out.insert(x.name());
             return out;
           })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", [](const Term& t) {
        return std::hash<std::string>{}(to_string(t));
      })
      .def("__str__", [](const Term& t) { return to_string(t); })
      .def("__repr__",
           [](const Term& t) { return "Term('" + to_string(t) + "')"; });
  py::implicitly_convertible<py::str, Term>();

  m.def("parse_term", [](const std::string& s) { return parse_term(s); },
        py::arg("text"));

  m.def("permute_atom",
        [](const SwapList& perm, const std::string& a) {
          return permute(to_permutation(perm), Atom(a)).name();
        },
        py::arg("perm"), py::arg("atom"));
  m.def("permute",
        [](const SwapList& perm, const Term& t) {
          return permute(to_permutation(perm), t);
        },
        py::arg("perm"), py::arg("term"));
  m.def("disagreement_set",
        [](const SwapList& p, const SwapList& q) {
          return names(disagreement_set(to_permutation(p), to_permutation(q)));
        },
        py::arg("p"), py::arg("q"));

  m.def("fresh",
        [](const std::string& a, const Term& t, const ConstraintList& nabla) {
          return fresh(to_env(nabla), Atom(a), t);
        },
        py::arg("atom"), py::arg("term"), py::arg("nabla") = ConstraintList{});
  m.def("alpha_eq",
        [](const Term& lhs, const Term& rhs, const ConstraintList& nabla) {
          return alpha_eq(to_env(nabla), lhs, rhs);
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("nabla") = ConstraintList{});
  m.def("weak_eq", &weak_eq, py::arg("lhs"), py::arg("rhs"));
  m.def("ground_alpha_eq", &oracle::ground_alpha_eq, py::arg("lhs"),
        py::arg("rhs"));

  m.def("solve",
        [](const std::string& text) {
          const ProblemSet problems = parse_problem_file(text);
          return result_to_dict(solve(problems), problems);
        },
        py::arg("problems"),
        "Solves the problems in a problem-file text and returns a dict with "
        "'status', 'nabla', 'sigma', 'error', 'valid' and 'text'.");
  m.def("solve_json",
        [](const std::string& text) {
          return format_solution_json(solve(parse_problem_file(text)));
        },
        py::arg("problems"));
}

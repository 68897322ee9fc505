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

#include "nomunify/syntax.h"

#include <fmt/format.h>

#include <cctype>
#include <nlohmann/json.hpp>
#include <utility>
#include <variant>

namespace nomunify {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(fmt::format("{}:{}: {}", line, column, message)),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  kLAngle,
  kRAngle,
  kLParen,
  kRParen,
  kComma,
  kDot,
  kEqQuery,     // =?
  kFreshQuery,  // #?
  kLowerIdent,
  kUpperIdent,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::kLAngle:
      return "'<'";
    case Tok::kRAngle:
      return "'>'";
    case Tok::kLParen:
      return "'('";
    case Tok::kRParen:
      return "')'";
    case Tok::kComma:
      return "','";
    case Tok::kDot:
      return "'.'";
    case Tok::kEqQuery:
      return "'=?'";
    case Tok::kFreshQuery:
      return "'#?'";
    case Tok::kLowerIdent:
      return "atom or function symbol";
    case Tok::kUpperIdent:
      return "variable";
    case Tok::kEnd:
      return "end of input";
  }
  return "token";
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Lexes one or more lines; `--` comments run to the end of their line.
std::vector<Token> lex(std::string_view input, std::size_t first_line) {
  std::vector<Token> tokens;
  std::size_t line = first_line;
  std::size_t column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    tokens.push_back(Token{kind, std::string(input.substr(i, len)), line, column});
    i += len;
    column += len;
  };
  while (i < input.size()) {
    const char c = input[i];
    const char next = i + 1 < input.size() ? input[i + 1] : '\0';
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
    } else if (c == '-' && next == '-') {
      while (i < input.size() && input[i] != '\n') ++i;
    } else if (c == '<') {
      push(Tok::kLAngle, 1);
    } else if (c == '>') {
      push(Tok::kRAngle, 1);
    } else if (c == '(') {
      push(Tok::kLParen, 1);
    } else if (c == ')') {
      push(Tok::kRParen, 1);
    } else if (c == ',') {
      push(Tok::kComma, 1);
    } else if (c == '.') {
      push(Tok::kDot, 1);
    } else if (c == '=' && next == '?') {
      push(Tok::kEqQuery, 2);
    } else if (c == '#' && next == '?') {
      push(Tok::kFreshQuery, 2);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (i + len < input.size() && is_ident_char(input[i + len])) ++len;
      push(std::islower(static_cast<unsigned char>(c)) ? Tok::kLowerIdent
                                                       : Tok::kUpperIdent,
           len);
    } else {
      throw ParseError(fmt::format("unexpected character '{}'", c), line,
                       column);
    }
  }
  tokens.push_back(Token{Tok::kEnd, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term term() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::kLAngle:
        return unit_or_pair();
      case Tok::kUpperIdent:
        return Term::var(VarName(advance().text));
      case Tok::kLowerIdent: {
        std::string name = advance().text;
        if (peek().kind == Tok::kDot) {
          advance();
          return Term::abs(Atom(std::move(name)), term());
        }
        if (starts_term(peek().kind)) return Term::fun(std::move(name), term());
        return Term::atom(Atom(std::move(name)));
      }
      case Tok::kLParen:
        return suspension_or_group();
      default:
        throw error_at(tok, fmt::format("expected a term, found {}",
                                        describe(tok.kind)));
    }
  }

  UnifProblem problem() {
    if (peek().kind == Tok::kLowerIdent &&
        peek(1).kind == Tok::kFreshQuery) {
      Atom a(advance().text);
      advance();
      return Freshness{std::move(a), term()};
    }
    Term lhs = term();
    expect(Tok::kEqQuery);
    return Equational{std::move(lhs), term()};
  }

  void expect_end() { expect(Tok::kEnd); }

 private:
  static bool starts_term(Tok kind) {
    return kind == Tok::kLAngle || kind == Tok::kLParen ||
           kind == Tok::kLowerIdent || kind == Tok::kUpperIdent;
  }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t at = pos_ + ahead;
    return at < tokens_.size() ? tokens_[at] : tokens_.back();
  }

  const Token& advance() {
    const Token& tok = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) {
      throw error_at(peek(), fmt::format("expected {}, found {}",
                                         describe(kind), describe(peek().kind)));
    }
    return advance();
  }

  static ParseError error_at(const Token& tok, const std::string& message) {
    return ParseError(message, tok.line, tok.column);
  }

  Term unit_or_pair() {
    expect(Tok::kLAngle);
    if (peek().kind == Tok::kRAngle) {
      advance();
      return Term::unit();
    }
    Term left = term();
    expect(Tok::kComma);
    Term right = term();
    expect(Tok::kRAngle);
    return Term::pair(std::move(left), std::move(right));
  }

  // "(a b)(c d)X" is a suspension; anything else starting with "(" is a
  // parenthesised term, e.g. "(f a)".
  Term suspension_or_group() {
    const std::size_t start = pos_;
    std::vector<Swapping> swaps;
    while (peek().kind == Tok::kLParen && peek(1).kind == Tok::kLowerIdent &&
           peek(2).kind == Tok::kLowerIdent && peek(3).kind == Tok::kRParen) {
      advance();
      Atom first(advance().text);
      Atom second(advance().text);
      advance();
      swaps.push_back(Swapping{std::move(first), std::move(second)});
    }
    if (!swaps.empty() && peek().kind == Tok::kUpperIdent) {
      return Term::susp(Permutation(std::move(swaps)), VarName(advance().text));
    }
    pos_ = start;
    expect(Tok::kLParen);
    Term inner = term();
    expect(Tok::kRParen);
    return inner;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kUnit:
      out += "<>";
      return;
    case Term::Kind::kPair:
      out += '<';
      print(t.left(), out);
      out += ", ";
      print(t.right(), out);
      out += '>';
      return;
    case Term::Kind::kFun:
      out += t.symbol();
      out += ' ';
      print(t.arg(), out);
      return;
    case Term::Kind::kAtom:
      out += t.atom_value().name();
      return;
    case Term::Kind::kAbs:
      out += t.binder().name();
      out += '.';
      print(t.body(), out);
      return;
    case Term::Kind::kSusp:
      out += to_string(t.perm());
      out += t.var_name().name();
      return;
  }
}

nlohmann::json env_json(const FreshnessEnv& env) {
  nlohmann::json nabla = nlohmann::json::array();
  for (const auto& c : env) nabla.push_back(nlohmann::json::array({c.atom.name(), c.var.name()}));
  return nabla;
}

nlohmann::json subst_json(const Subst& s) {
  nlohmann::json sigma = nlohmann::json::object();
  for (const auto& [x, t] : s) sigma[x.name()] = to_string(t);
  return sigma;
}

}  // namespace

Term parse_term(std::string_view input) {
  Parser parser(lex(input, 1));
  Term t = parser.term();
  parser.expect_end();
  return t;
}

UnifProblem parse_problem(std::string_view input) {
  Parser parser(lex(input, 1));
  UnifProblem p = parser.problem();
  parser.expect_end();
  return p;
}

ProblemSet parse_problem_file(std::string_view input) {
  ProblemSet problems;
  std::size_t line_no = 1;
  while (!input.empty()) {
    const std::size_t eol = input.find('\n');
    std::string_view line = input.substr(0, eol);
    std::vector<Token> tokens = lex(line, line_no);
    if (tokens.front().kind != Tok::kEnd) {
      Parser parser(std::move(tokens));
      problems.push_back(parser.problem());
      parser.expect_end();
    }
    if (eol == std::string_view::npos) break;
    input.remove_prefix(eol + 1);
    ++line_no;
  }
  return problems;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (const Swapping& s : p.swaps()) {
    out += fmt::format("({} {})", s.first.name(), s.second.name());
  }
  return out;
}

std::string to_string(const UnifProblem& p) {
  if (const auto* eq = std::get_if<Equational>(&p)) {
    return fmt::format("{} =? {}", to_string(eq->lhs), to_string(eq->rhs));
  }
  const auto& fr = std::get<Freshness>(p);
  return fmt::format("{} #? {}", fr.atom.name(), to_string(fr.target));
}

std::string to_string(const FreshnessEnv& env) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : env) {
    if (!first) out += ", ";
    first = false;
    out += fmt::format("{}#{}", c.atom.name(), c.var.name());
  }
  return out + "}";
}

std::string to_string(const Subst& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& [x, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += fmt::format("{} := {}", x.name(), to_string(t));
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << to_string(t);
}
std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << (p.is_empty() ? "[]" : to_string(p));
}
std::ostream& operator<<(std::ostream& os, const Equational& p) {
  return os << to_string(UnifProblem(p));
}
std::ostream& operator<<(std::ostream& os, const Freshness& p) {
  return os << to_string(UnifProblem(p));
}
std::ostream& operator<<(std::ostream& os, const FreshnessEnv& env) {
  return os << to_string(env);
}
std::ostream& operator<<(std::ostream& os, const Subst& s) {
  return os << to_string(s);
}

std::string format_solution(const SolveResult& result) {
  if (const auto* sol = std::get_if<Solution>(&result)) {
    return fmt::format("NABLA = {}\nSIGMA = {}", to_string(sol->env),
                       to_string(sol->subst));
  }
  const auto& err = std::get<UnifyError>(result);
  return fmt::format("FAIL {}: {}", to_string(err.kind), to_string(err.problem));
}

std::string format_solution_json(const SolveResult& result,
                                 const std::vector<StepRecord>* trace) {
  nlohmann::json j;
  if (const auto* sol = std::get_if<Solution>(&result)) {
    j["status"] = "solved";
    j["nabla"] = env_json(sol->env);
    j["sigma"] = subst_json(sol->subst);
    j["error"] = nullptr;
  } else {
    const auto& err = std::get<UnifyError>(result);
    j["status"] = "fail";
    j["nabla"] = nlohmann::json::array();
    j["sigma"] = nlohmann::json::object();
    j["error"] = {{"kind", to_string(err.kind)},
                  {"problem", to_string(err.problem)}};
  }
  if (trace != nullptr) {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepRecord& r : *trace) steps.push_back(format_step(r));
    j["trace"] = std::move(steps);
  }
  return j.dump();
}

std::string format_step(const StepRecord& record) {
  std::string after;
  if (record.failure) {
    after = fmt::format("FAIL {}", to_string(*record.failure));
  } else if (record.binding) {
    after = to_string(*record.binding);
  } else if (record.constraint) {
    after = fmt::format("{{{}#{}}}", record.constraint->atom.name(),
                        record.constraint->var.name());
  } else if (record.produced.empty()) {
    after = "{}";
  } else {
    for (std::size_t i = 0; i < record.produced.size(); ++i) {
      if (i > 0) after += ", ";
      after += to_string(record.produced[i]);
    }
  }
  return fmt::format("{}: {} ==> {}", record.rule, to_string(record.before),
                     after);
}

}  // namespace nomunify

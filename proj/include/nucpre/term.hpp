#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "nucleus.hpp"

namespace nucpre {

struct Term {
  enum class Op { var, one, mul, join, gamma };
  Op op = Op::one;
  int var = -1;
  std::vector<Term> args;

  static Term variable(int i) { return Term{Op::var, i, {}}; }
  static Term unit() { return Term{Op::one, -1, {}}; }
  static Term product(Term a, Term b) { return Term{Op::mul, -1, {std::move(a), std::move(b)}}; }
  static Term lub(Term a, Term b) { return Term{Op::join, -1, {std::move(a), std::move(b)}}; }
  static Term closure(Term a) { return Term{Op::gamma, -1, {std::move(a)}}; }

  int depth() const {
    int d = 0;
    for (const Term& t : args) d = std::max(d, t.depth() + 1);
    return d;
  }
  bool uses(Op o) const {
    if (op == o) return true;
    for (const Term& t : args)
      if (t.uses(o)) return true;
    return false;
  }
  int max_var() const {
    int m = op == Op::var ? var : -1;
    for (const Term& t : args) m = std::max(m, t.max_var());
    return m;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Inequality {
  Term lhs, rhs;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct QuasiInequality {
  std::vector<Inequality> premises;
  Inequality conclusion;
  std::vector<std::string> names;  // variable names by index

  int var_count() const { return static_cast<int>(names.size()); }
  bool uses(Term::Op o) const {
    if (conclusion.lhs.uses(o) || conclusion.rhs.uses(o)) return true;
    for (const auto& p : premises)
      if (p.lhs.uses(o) || p.rhs.uses(o)) return true;
    return false;
  }
  friend bool operator==(const QuasiInequality& x, const QuasiInequality& y) {
    return x.premises == y.premises && x.conclusion == y.conclusion &&
           x.names.size() == y.names.size();
  }
};

enum class QuasiClass { simple, unital_simple, general };

inline const char* to_string(QuasiClass c) {
  switch (c) {
    case QuasiClass::simple: return "simple";
    case QuasiClass::unital_simple: return "unital-simple";
    case QuasiClass::general: return "general";
  }
  return "general";
}

inline QuasiClass classify(const QuasiInequality& phi) {
  bool unital = false;
  for (const auto& p : phi.premises) {
    const auto op = p.rhs.op;
    if (op == Term::Op::var || op == Term::Op::gamma) continue;
    if (op == Term::Op::one) {
      unital = true;
      continue;
    }
    return QuasiClass::general;
  }
  return unital ? QuasiClass::unital_simple : QuasiClass::simple;
}

// ---- printing and parsing -------------------------------------------------

inline std::string default_var_name(int i) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  if (i < 6) return names[i];
  return "x" + std::to_string(i);
}

inline std::string to_string(const Term& t, const std::vector<std::string>& names) {
  auto name = [&](int i) {
    return i < static_cast<int>(names.size()) ? names[i] : default_var_name(i);
  };
  switch (t.op) {
    case Term::Op::var: return name(t.var);
    case Term::Op::one: return "1";
    case Term::Op::gamma: return "g(" + to_string(t.args[0], names) + ")";
    case Term::Op::join: return to_string(t.args[0], names) + " | " + to_string(t.args[1], names);
    case Term::Op::mul: {
      auto side = [&](const Term& s) {
        auto str = to_string(s, names);
        return s.op == Term::Op::join ? "(" + str + ")" : str;
      };
      return side(t.args[0]) + "*" + side(t.args[1]);
    }
  }
  return "?";
}

inline std::string to_string(const QuasiInequality& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.premises.size(); ++i) {
    if (i) out += " & ";
    out += to_string(phi.premises[i].lhs, phi.names) + " <= " +
           to_string(phi.premises[i].rhs, phi.names);
  }
  if (!phi.premises.empty()) out += " => ";
  out += to_string(phi.conclusion.lhs, phi.names) + " <= " +
         to_string(phi.conclusion.rhs, phi.names);
  return out;
}

namespace detail {

class QuasiParser {
 public:
  explicit QuasiParser(const std::string& s) : s_(s) {}

  QuasiInequality parse() {
    QuasiInequality phi;
    std::vector<Inequality> parts{inequality()};
    while (accept("&")) parts.push_back(inequality());
    if (accept("=>")) {
      phi.premises = std::move(parts);
      phi.conclusion = inequality();
    } else if (parts.size() == 1) {
      phi.conclusion = std::move(parts.front());
    } else {
      fail("premises without '=>'");
    }
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    phi.names = names_;
    return phi;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("quasi-inequality: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  Inequality inequality() {
    Term l = expr();
    if (!accept("<=")) fail("expected '<='");
    Term r = expr();
    return {std::move(l), std::move(r)};
  }
  Term expr() {
    Term t = prod();
    while (accept("|")) t = Term::lub(std::move(t), prod());
    return t;
  }
  Term prod() {
    Term t = atom();
    while (accept("*")) t = Term::product(std::move(t), atom());
    return t;
  }
  Term atom() {
    skip();
    if (accept("(")) {
      Term t = expr();
      if (!accept(")")) fail("expected ')'");
      return t;
    }
    if (accept("1")) return Term::unit();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a term");
    std::string id = s_.substr(start, pos_ - start);
    if (std::isdigit(static_cast<unsigned char>(id[0]))) fail("bad identifier");
    if (id == "g" && accept("(")) {
      Term t = expr();
      if (!accept(")")) fail("expected ')'");
      return Term::closure(std::move(t));
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == id) return Term::variable(static_cast<int>(i));
    names_.push_back(id);
    return Term::variable(static_cast<int>(names_.size() - 1));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

}  // namespace detail

inline QuasiInequality parse_quasi(const std::string& text) {
  return detail::QuasiParser(text).parse();
}

// ---- evaluation -------------------------------------------------------------

// A term flattened to postfix form for repeated evaluation.
class CompiledTerm {
 public:
  explicit CompiledTerm(const Term& t) { emit(t); }

  Elem eval(const FinitePomonoid& A, const std::vector<Elem>* closure,
            const std::vector<Elem>& env) const {
    Elem stack[32];
    int top = 0;
    for (const auto& [op, arg] : code_) {
      switch (op) {
        case Term::Op::var: stack[top++] = env[arg]; break;
        case Term::Op::one: stack[top++] = *A.unit; break;
        case Term::Op::gamma: stack[top - 1] = (*closure)[stack[top - 1]]; break;
        case Term::Op::mul:
          --top;
          stack[top - 1] = A.mul(stack[top - 1], stack[top]);
          break;
        case Term::Op::join:
          --top;
          stack[top - 1] = A.join(stack[top - 1], stack[top]);
          break;
      }
    }
    return stack[0];
  }

 private:
  void emit(const Term& t) {
    for (const Term& a : t.args) emit(a);
    code_.emplace_back(t.op, t.var);
    if (code_.size() > 32) throw StructuralError("term too large to evaluate");
  }
  std::vector<std::pair<Term::Op, int>> code_;
};

inline void check_signature(const QuasiInequality& phi, const FinitePomonoid& A,
                            const Nucleus* g) {
  if (phi.uses(Term::Op::join) && !A.has_join())
    throw SignatureMismatch("formula uses joins but the algebra has none");
  if (phi.uses(Term::Op::one) && !A.unit)
    throw SignatureMismatch("formula uses 1 but the algebra has no unit");
  if (phi.uses(Term::Op::gamma) && !g)
    throw SignatureMismatch("formula uses g but no nucleus was given");
}

// First assignment (in odometer order) satisfying the premises and failing
// the conclusion, or nothing when the quasi-inequality is valid.
inline std::optional<std::vector<Elem>> eval_quasi(const QuasiInequality& phi,
                                                   const FinitePomonoid& A,
                                                   const Nucleus* g = nullptr) {
  check_signature(phi, A, g);
  const std::vector<Elem>* closure = g ? &g->map : nullptr;
  std::vector<std::pair<CompiledTerm, CompiledTerm>> prem;
  for (const auto& p : phi.premises) prem.emplace_back(CompiledTerm(p.lhs), CompiledTerm(p.rhs));
  const CompiledTerm cl(phi.conclusion.lhs), cr(phi.conclusion.rhs);
  const int k = phi.var_count();
  std::vector<Elem> env(k, 0);
  while (true) {
    bool premises = true;
    for (const auto& [l, r] : prem)
      if (!A.le(l.eval(A, closure, env), r.eval(A, closure, env))) {
        premises = false;
        break;
      }
    if (premises && !A.le(cl.eval(A, closure, env), cr.eval(A, closure, env))) return env;
    int i = 0;
    while (i < k && ++env[i] == A.n) env[i++] = 0;
    if (i == k) break;
  }
  return std::nullopt;
}

}  // namespace nucpre

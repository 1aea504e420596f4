#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "idl.hpp"
#include "nucleus.hpp"
#include "term.hpp"
#include "words.hpp"

namespace nucpre {

struct Signature {
  bool join = false;
};

namespace detail {

inline int op_count(const Term& t) {
  int c = t.args.empty() ? 0 : 1;
  for (const Term& a : t.args) c += op_count(a);
  return c;
}

// Every pair (A, g) over the three-element catalog of the signature; terms
// that agree on all of them are treated as the same term.
inline const std::vector<std::pair<FinitePomonoid, Nucleus>>& probe_pairs(bool join) {
  static const auto plain = [] {
    std::vector<std::pair<FinitePomonoid, Nucleus>> out;
    for (auto& A : enumerate_pomonoids(3, Structure::pomonoid, false))
      for (auto& g : enumerate_nuclei(A)) out.emplace_back(A, g);
    return out;
  }();
  static const auto lattice = [] {
    std::vector<std::pair<FinitePomonoid, Nucleus>> out;
    for (auto& A : enumerate_pomonoids(3, Structure::sl_monoid, false))
      for (auto& g : enumerate_nuclei(A)) out.emplace_back(A, g);
    return out;
  }();
  return join ? lattice : plain;
}

inline std::vector<Elem> term_signature(const Term& t, int vars, bool join) {
  std::vector<Elem> s;
  const CompiledTerm c(t);
  for (const auto& [A, g] : probe_pairs(join)) {
    std::vector<Elem> env(vars, 0);
    while (true) {
      s.push_back(c.eval(A, &g.map, env));
      int i = 0;
      while (i < vars && ++env[i] == A.n) env[i++] = 0;
      if (i == vars) break;
    }
  }
  return s;
}

}  // namespace detail

// Terms with at most `ops` operation symbols over `vars` variables and 1,
// one representative per function on the probe pairs, in generation order.
inline std::vector<Term> generate_terms(int ops, int vars, Signature sig) {
  std::map<std::vector<Elem>, int> seen;
  std::vector<Term> out;
  auto add = [&](Term t) {
    if (seen.emplace(detail::term_signature(t, vars, sig.join), 0).second)
      out.push_back(std::move(t));
  };
  for (int i = 0; i < vars; ++i) add(Term::variable(i));
  add(Term::unit());
  for (int level = 1; level <= ops; ++level) {
    const auto prev = out;
    for (const Term& a : prev)
      if (detail::op_count(a) + 1 <= ops) add(Term::closure(a));
    for (const Term& a : prev)
      for (const Term& b : prev)
        if (detail::op_count(a) + detail::op_count(b) + 1 <= ops) add(Term::product(a, b));
    if (sig.join)
      for (std::size_t i = 0; i < prev.size(); ++i)
        for (std::size_t j = i + 1; j < prev.size(); ++j)
          if (detail::op_count(prev[i]) + detail::op_count(prev[j]) + 1 <= ops)
            add(Term::lub(prev[i], prev[j]));
  }
  return out;
}

// Simple quasi-inequalities with at most one premise whose terms use at
// most `depth` operation symbols in total.
inline std::vector<QuasiInequality> generate_simple(int depth, int vars, Signature sig) {
  if (depth > 2 || vars > 3) throw StructuralError("generation is capped at depth 2, 3 variables");
  const auto terms = generate_terms(depth, vars, sig);
  std::vector<Term> rhs;
  for (const Term& t : terms)
    if (t.op == Term::Op::var || t.op == Term::Op::gamma) rhs.push_back(t);
  std::vector<std::string> names;
  for (int i = 0; i < vars; ++i) names.push_back(default_var_name(i));
  std::vector<QuasiInequality> out;
  using detail::op_count;
  for (const Term& t : terms)
    for (const Term& u : terms)
      if (!(t == u) && op_count(t) + op_count(u) <= depth)
        out.push_back(QuasiInequality{{}, {t, u}, names});
  for (const Term& s : terms)
    for (const Term& r : rhs) {
      if (s == r) continue;
      const int used = op_count(s) + op_count(r);
      if (used > depth) continue;
      for (const Term& t : terms)
        for (const Term& u : terms)
          if (!(t == u) && used + op_count(t) + op_count(u) <= depth)
            out.push_back(QuasiInequality{{{s, r}}, {t, u}, names});
    }
  return out;
}

// ---- square condition -------------------------------------------------------

// An n x n table; rows[r][c] lists the variables in that cell, in order.
struct SquareTable {
  int n = 0;
  int vars = 0;
  std::vector<std::vector<std::vector<int>>> rows;
  friend bool operator==(const SquareTable&, const SquareTable&) = default;
};

inline std::string to_string(const SquareTable& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += " / ";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) out += " | ";
      if (t.rows[r][c].empty()) out += "-";
      for (std::size_t i = 0; i < t.rows[r][c].size(); ++i) {
        if (i) out += "*";
        out += "x" + std::to_string(t.rows[r][c][i] + 1);
      }
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::vector<int>>> square_rows(int n, int vars, bool commutative) {
  std::vector<std::vector<std::vector<int>>> rows;
  if (commutative) {
    // each variable picks a column
    std::vector<int> col(vars, 0);
    while (true) {
      std::vector<std::vector<int>> row(n);
      for (int v = 0; v < vars; ++v) row[col[v]].push_back(v);
      rows.push_back(std::move(row));
      int i = vars - 1;
      while (i >= 0 && ++col[i] == n) col[i--] = 0;
      if (i < 0) break;
    }
    return rows;
  }
  // cut points 0 <= c1 <= ... <= c_{n-1} <= vars
  std::vector<int> cuts(n - 1, 0);
  auto rec = [&](auto&& self, int k, int lo) -> void {
    if (k == n - 1) {
      std::vector<std::vector<int>> row(n);
      int start = 0;
      for (int c = 0; c < n; ++c) {
        const int end = c < n - 1 ? cuts[c] : vars;
        for (int v = start; v < end; ++v) row[c].push_back(v);
        start = end;
      }
      rows.push_back(std::move(row));
      return;
    }
    for (int c = lo; c <= vars; ++c) {
      cuts[k] = c;
      self(self, k + 1, c);
    }
  };
  rec(rec, 0, 0);
  return rows;
}

}  // namespace detail

// Commutative mode: rows assign variables to columns freely and tables are
// taken up to row order. Consecutive mode: rows cut x1...xk into blocks and
// row order matters for the column products.
inline std::vector<SquareTable> square_tables(int n, int vars, bool commutative) {
  if (n < 1 || n > 4) throw StructuralError("square tables are built for 1 <= n <= 4");
  const auto rows = detail::square_rows(n, vars, commutative);
  const int r = static_cast<int>(rows.size());
  std::vector<SquareTable> out;
  std::vector<int> pick(n, 0);
  while (true) {
    SquareTable t{n, vars, {}};
    for (int i : pick) t.rows.push_back(rows[i]);
    out.push_back(std::move(t));
    int i = n - 1;
    while (i >= 0 && ++pick[i] == r) --i;
    if (i < 0) break;
    for (int j = i + 1; j < n; ++j) pick[j] = commutative ? pick[i] : 0;
  }
  return out;
}

struct SquareWitness {
  SquareTable table;
  std::vector<Elem> assignment;  // values of x1..xk
  std::optional<Elem> y;         // absent for the join form
};

namespace detail {

inline Elem cell_product(const FinitePomonoid& A, const std::vector<int>& cell,
                         const std::vector<Elem>& env, Elem acc) {
  for (int v : cell) acc = A.mul(acc, env[v]);
  return acc;
}

inline Elem column_product(const FinitePomonoid& A, const SquareTable& t, int c,
                           const std::vector<Elem>& env) {
  Elem acc = A.one();
  for (const auto& row : t.rows) acc = cell_product(A, row[c], env, acc);
  return acc;
}

// Does the table's implication hold for this assignment and every y?
inline std::optional<std::optional<Elem>> table_fails(const FinitePomonoid& A, const SquareTable& t,
                                                      const std::vector<Elem>& env,
                                                      bool join_form) {
  Elem pi = A.one();
  for (Elem e : env) pi = A.mul(pi, e);
  if (join_form) {
    Elem bound = column_product(A, t, 0, env);
    for (int c = 1; c < t.n; ++c) bound = A.join(bound, column_product(A, t, c, env));
    if (!A.le(pi, bound)) return std::optional<Elem>{};
    return std::nullopt;
  }
  std::vector<Elem> cols(t.n);
  for (int c = 0; c < t.n; ++c) cols[c] = column_product(A, t, c, env);
  for (Elem y = 0; y < A.n; ++y) {
    bool premises = true;
    for (Elem c : cols) premises = premises && A.le(c, y);
    if (premises && !A.le(pi, y)) return std::optional<Elem>{y};
  }
  return std::nullopt;
}

}  // namespace detail

// Tables of size n <= n_max over k <= vars_max variables; the join form is
// used when A has joins. vars_max defaults to n_max.
inline std::optional<SquareWitness> check_square_condition(const FinitePomonoid& A, int n_max,
                                                           std::optional<int> vars_max,
                                                           bool commutative_mode) {
  const int kmax = vars_max.value_or(n_max);
  const bool join_form = A.has_join();
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= kmax; ++k)
      for (const SquareTable& t : square_tables(n, k, commutative_mode)) {
        std::vector<Elem> env(k, 0);
        while (true) {
          if (auto y = detail::table_fails(A, t, env, join_form)) return SquareWitness{t, env, *y};
          int i = 0;
          while (i < k && ++env[i] == A.n) env[i++] = 0;
          if (i == k) break;
        }
      }
  return std::nullopt;
}

inline std::optional<SquareWitness> check_square_condition(const FinitePomonoid& A, int n_max) {
  return check_square_condition(A, n_max, std::nullopt, A.is_commutative());
}

struct BridgeDivergence {
  int n = 0, vars = 0;
  bool square_holds = false;
  bool words_hold = false;
  std::optional<Word> w;
  std::optional<Elem> a;
};

// Square condition at table size n over k variables versus
// w^n <= [a]^n => w <= [a] for words with k letters.
template <class Pre>
std::optional<BridgeDivergence> check_power_bridge(const Pre& pre, int n_max, int L) {
  const FinitePomonoid& A = pre.base();
  if (!A.is_commutative()) throw StructuralError("the power bridge is stated for commutative bases");
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= L; ++k) {
      bool square = true;
      for (const SquareTable& t : square_tables(n, k, true)) {
        std::vector<Elem> env(k, 0);
        while (square) {
          if (detail::table_fails(A, t, env, false)) square = false;
          int i = 0;
          while (i < k && ++env[i] == A.n) env[i++] = 0;
          if (i == k) break;
        }
        if (!square) break;
      }
      bool words = true;
      std::optional<Word> bad_w;
      std::optional<Elem> bad_a;
      for (const Word& w : all_words(A.n, k, k, true)) {
        for (Elem a = 0; a < A.n && words; ++a) {
          const Word sa{a};
          if (pre.le(power(w, n), power(sa, n)) && !pre.le(w, sa)) {
            words = false;
            bad_w = w;
            bad_a = a;
          }
        }
        if (!words) break;
      }
      if (square != words) return BridgeDivergence{n, k, square, words, bad_w, bad_a};
    }
  return std::nullopt;
}

// ---- Id cancellativity and cycle sentences ---------------------------------

struct CycleViolation {
  Side side;
  Elem y;
  std::vector<Elem> xs, zs;  // premises x_i y <= x_{i+1} z_{i+1}, cyclically
};

struct IdCancelWitness {
  Antichain<Elem> a, b, c;  // a*b <= a*c (or b*a <= c*a) with b not below c
  Side side;
};

struct IdCancelReport {
  bool id_cancellative = true;
  std::optional<IdCancelWitness> direct;
  bool sentences_hold = true;
  std::optional<CycleViolation> violation;
  std::optional<IdCancelWitness> constructed;
};

// Exhaustive order cancellativity of Id A.
inline std::optional<IdCancelWitness> id_cancellativity_witness(const FinitePomonoid& A) {
  IdAlgebra<ElementCarrier> id{ElementCarrier(A)};
  const auto xs = all_antichains(id.carrier());
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs) {
        if (id.le(b, c)) continue;
        if (id.le(id.mult(a, b), id.mult(a, c))) return IdCancelWitness{a, b, c, Side::left};
        if (id.le(id.mult(b, a), id.mult(c, a))) return IdCancelWitness{a, b, c, Side::right};
      }
  return std::nullopt;
}

// A cycle sentence of length n fails exactly when, for some y, the graph with
// an edge x -> x' whenever x*y <= x'*z for a z not above y has a closed walk
// of length n.
inline std::optional<CycleViolation> find_cycle_violation(const FinitePomonoid& A, int n,
                                                          Side side) {
  const int k = A.n;
  for (Elem y = 0; y < k; ++y) {
    // label[x][x'] = some admissible z, or -1
    std::vector<Elem> label(k * k, -1);
    for (Elem x = 0; x < k; ++x)
      for (Elem x2 = 0; x2 < k; ++x2)
        for (Elem z = 0; z < k && label[x * k + x2] < 0; ++z) {
          if (A.le(y, z)) continue;
          const bool edge = side == Side::left ? A.le(A.mul(x, y), A.mul(x2, z))
                                               : A.le(A.mul(y, x), A.mul(z, x2));
          if (edge) label[x * k + x2] = z;
        }
    for (Elem start = 0; start < k; ++start) {
      // parent[step][v]: predecessor on a walk of `step` edges from start
      std::vector<std::vector<Elem>> parent(n + 1, std::vector<Elem>(k, -1));
      std::vector<char> at(k, 0);
      at[start] = 1;
      for (int step = 1; step <= n; ++step) {
        std::vector<char> next(k, 0);
        for (Elem v = 0; v < k; ++v) {
          if (!at[v]) continue;
          for (Elem w = 0; w < k; ++w)
            if (label[v * k + w] >= 0 && !next[w]) {
              next[w] = 1;
              parent[step][w] = v;
            }
        }
        at = std::move(next);
      }
      if (!at[start]) continue;
      std::vector<Elem> walk(n + 1);
      walk[n] = start;
      for (int step = n; step >= 1; --step) walk[step - 1] = parent[step][walk[step]];
      CycleViolation v{side, y, {}, {}};
      for (int i = 0; i < n; ++i) v.xs.push_back(walk[i]);
      // z_{i+1} labels the edge x_i -> x_{i+1}; zs[j] holds z_{j+1}
      v.zs.assign(n, -1);
      for (int i = 0; i < n; ++i) v.zs[(i + 1) % n] = label[walk[i] * k + walk[i + 1]];
      return v;
    }
  }
  return std::nullopt;
}

// Turns a violated cycle sentence into a failure of cancellativity in Id A:
// a is the join of the x_i, b = down(y), c the join of the z_i.
inline IdCancelWitness witness_from_cycle(const FinitePomonoid& A, const CycleViolation& v) {
  IdAlgebra<ElementCarrier> id{ElementCarrier(A)};
  return IdCancelWitness{id.normalize(v.xs), id.down(v.y), id.normalize(v.zs), v.side};
}

inline IdCancelReport check_id_cancel_criterion(const FinitePomonoid& A, int n_max) {
  IdCancelReport rep;
  rep.direct = id_cancellativity_witness(A);
  rep.id_cancellative = !rep.direct.has_value();
  for (int n = 1; n <= n_max && !rep.violation; ++n)
    for (Side side : {Side::left, Side::right})
      if (auto v = find_cycle_violation(A, n, side)) {
        rep.violation = v;
        break;
      }
  rep.sentences_hold = !rep.violation.has_value();
  if (rep.violation) rep.constructed = witness_from_cycle(A, *rep.violation);
  return rep;
}

struct PowerWitness {
  int n;
  Elem x, y;
};

// x^n <= y^n => x <= y for 1 <= n <= n_max.
inline std::optional<PowerWitness> check_xn_yn(const FinitePomonoid& A, int n_max = 4) {
  for (int n = 1; n <= n_max; ++n)
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y) {
        Elem px = x, py = y;
        for (int i = 1; i < n; ++i) {
          px = A.mul(px, x);
          py = A.mul(py, y);
        }
        if (A.le(px, py) && !A.le(x, y)) return PowerWitness{n, x, y};
      }
  return std::nullopt;
}

}  // namespace nucpre

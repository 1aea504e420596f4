#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nucpre {

using Elem = int;

enum class Structure { posemigroup, pomonoid, sl_monoid, residuated };

struct AlgebraKind {
  Structure structure = Structure::pomonoid;
  bool commutative = false;
};

enum class Side { left, right };

// A finite posemigroup with optional unit and optional join table.
// Meets and residuals are derived from the order when asked for.
struct FinitePomonoid {
  std::string name;
  int n = 0;
  std::vector<char> order;     // order[a * n + b] is a <= b
  std::vector<Elem> product;   // product[a * n + b] is a * b
  std::optional<Elem> unit;
  std::vector<Elem> joins;     // empty unless an sl-monoid

  int size() const { return n; }
  bool le(Elem a, Elem b) const { return order[a * n + b] != 0; }
  Elem mul(Elem a, Elem b) const { return product[a * n + b]; }
  bool has_unit() const { return unit.has_value(); }
  Elem one() const {
    if (!unit) throw StructuralError("algebra has no unit");
    return *unit;
  }
  bool has_join() const { return !joins.empty(); }
  Elem join(Elem a, Elem b) const { return joins[a * n + b]; }

  void check_shape() const {
    const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (n <= 0) throw StructuralError("algebra must have at least one element");
    if (order.size() != cells) throw StructuralError("order table has wrong size");
    if (product.size() != cells) throw StructuralError("mult table has wrong size");
    if (!joins.empty() && joins.size() != cells)
      throw StructuralError("join table has wrong size");
    auto in_range = [this](Elem e) { return e >= 0 && e < n; };
    if (!std::all_of(product.begin(), product.end(), in_range))
      throw StructuralError("mult entry out of range");
    if (!std::all_of(joins.begin(), joins.end(), in_range))
      throw StructuralError("join entry out of range");
    if (unit && !in_range(*unit)) throw StructuralError("unit out of range");
  }

  std::optional<Elem> lub(Elem a, Elem b) const {
    std::optional<Elem> best;
    for (Elem c = 0; c < n; ++c) {
      if (!le(a, c) || !le(b, c)) continue;
      if (!best || le(c, *best)) best = c;
    }
    if (!best) return std::nullopt;
    for (Elem c = 0; c < n; ++c)
      if (le(a, c) && le(b, c) && !le(*best, c)) return std::nullopt;
    return best;
  }

  std::optional<Elem> glb(Elem a, Elem b) const {
    std::optional<Elem> best;
    for (Elem c = 0; c < n; ++c) {
      if (!le(c, a) || !le(c, b)) continue;
      if (!best || le(*best, c)) best = c;
    }
    if (!best) return std::nullopt;
    for (Elem c = 0; c < n; ++c)
      if (le(c, a) && le(c, b) && !le(c, *best)) return std::nullopt;
    return best;
  }

  // Greatest x with a*x <= c (side left) or x*a <= c (side right).
  std::optional<Elem> residual(Elem a, Elem c, Side side) const {
    std::optional<Elem> best;
    for (Elem x = 0; x < n; ++x) {
      Elem p = side == Side::left ? mul(a, x) : mul(x, a);
      if (!le(p, c)) continue;
      if (!best || le(*best, x)) best = x;
    }
    if (!best) return std::nullopt;
    for (Elem x = 0; x < n; ++x) {
      Elem p = side == Side::left ? mul(a, x) : mul(x, a);
      if (le(p, c) && !le(x, *best)) return std::nullopt;
    }
    return best;
  }

  bool is_commutative() const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FinitePomonoid& x, const FinitePomonoid& y) {
    return x.n == y.n && x.order == y.order && x.product == y.product && x.unit == y.unit &&
           x.joins == y.joins;
  }
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.axiom == axiom; });
  }
};

// Every violated axiom is reported with one witness; a missing component
// required by the kind (unit, join table) throws StructuralError.
inline ValidationReport validate(const FinitePomonoid& A, AlgebraKind kind) {
  A.check_shape();
  ValidationReport rep;
  const int n = A.n;
  auto report = [&](const char* axiom, std::vector<Elem> w) {
    if (!rep.has(axiom)) rep.violations.push_back({axiom, std::move(w)});
  };

  for (Elem a = 0; a < n; ++a)
    if (!A.le(a, a)) report("reflexive", {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && A.le(a, b) && A.le(b, a)) report("antisymmetric", {a, b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (A.le(a, b) && A.le(b, c) && !A.le(a, c)) report("transitive", {a, b, c});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (A.mul(A.mul(a, b), c) != A.mul(a, A.mul(b, c))) report("associative", {a, b, c});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!A.le(a, b)) continue;
      for (Elem c = 0; c < n; ++c) {
        if (!A.le(A.mul(a, c), A.mul(b, c))) report("isotone", {a, b, c});
        if (!A.le(A.mul(c, a), A.mul(c, b))) report("isotone", {a, b, c});
      }
    }

  if (kind.structure != Structure::posemigroup) {
    if (!A.unit) throw StructuralError("kind requires a unit");
    const Elem e = *A.unit;
    for (Elem a = 0; a < n; ++a)
      if (A.mul(e, a) != a || A.mul(a, e) != a) report("unit", {a});
  }

  if (kind.commutative)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (A.mul(a, b) != A.mul(b, a)) report("commutative", {a, b});

  const bool wants_join =
      kind.structure == Structure::sl_monoid || kind.structure == Structure::residuated;
  if (wants_join) {
    if (!A.has_join()) throw StructuralError("kind requires a join table");
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem j = A.join(a, b);
        if (!A.le(a, j) || !A.le(b, j)) report("join-upper-bound", {a, b, j});
        for (Elem c = 0; c < n; ++c)
          if (A.le(a, c) && A.le(b, c) && !A.le(j, c)) report("join-least", {a, b, c});
        for (Elem c = 0; c < n; ++c) {
          if (A.mul(c, j) != A.join(A.mul(c, a), A.mul(c, b)))
            report("join-distributive", {c, a, b});
          if (A.mul(j, c) != A.join(A.mul(a, c), A.mul(b, c)))
            report("join-distributive", {a, b, c});
        }
      }
  }

  if (kind.structure == Structure::residuated) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!A.glb(a, b)) report("meet-exists", {a, b});
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c) {
        if (!A.residual(a, c, Side::left)) report("residual-exists", {a, c});
        if (!A.residual(a, c, Side::right)) report("residual-exists", {a, c});
      }
  }
  return rep;
}

inline bool is_integral(const FinitePomonoid& A) {
  const Elem e = A.one();
  for (Elem a = 0; a < A.n; ++a)
    if (!A.le(a, e)) return false;
  return true;
}

inline bool is_integrally_closed(const FinitePomonoid& A) {
  const int n = A.n;
  if (A.unit) {
    const Elem e = *A.unit;
    for (Elem a = 0; a < n; ++a)
      for (Elem x = 0; x < n; ++x) {
        if (A.le(A.mul(a, x), a) && !A.le(x, e)) return false;
        if (A.le(A.mul(x, a), a) && !A.le(x, e)) return false;
      }
    return true;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      for (Elem b = 0; b < n; ++b) {
        if (A.le(A.mul(a, x), a) && !A.le(A.mul(x, b), b)) return false;
        if (A.le(A.mul(x, a), a) && !A.le(A.mul(b, x), b)) return false;
      }
  return true;
}

inline bool is_cancellative(const FinitePomonoid& A) {
  const int n = A.n;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (A.le(a, b)) continue;
      for (Elem x = 0; x < n; ++x)
        if (A.le(A.mul(a, x), A.mul(b, x)) || A.le(A.mul(x, a), A.mul(x, b))) return false;
    }
  return true;
}

inline bool is_equationally_cancellative(const FinitePomonoid& A) {
  const int n = A.n;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b) continue;
      for (Elem x = 0; x < n; ++x)
        if (A.mul(a, x) == A.mul(b, x) || A.mul(x, a) == A.mul(x, b)) return false;
    }
  return true;
}

inline bool is_ideally_residuated(const FinitePomonoid& A) {
  const int n = A.n;
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      bool left = false, right = false;
      for (Elem x = 0; x < n; ++x) {
        left = left || A.le(A.mul(a, x), c);
        right = right || A.le(A.mul(x, a), c);
      }
      if (!left || !right) return false;
    }
  return true;
}

inline bool is_residuated(const FinitePomonoid& A) {
  for (Elem a = 0; a < A.n; ++a)
    for (Elem c = 0; c < A.n; ++c)
      if (!A.residual(a, c, Side::left) || !A.residual(a, c, Side::right)) return false;
  return true;
}

inline bool is_down_directed(const FinitePomonoid& A) {
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b) {
      bool found = false;
      for (Elem c = 0; c < A.n && !found; ++c) found = A.le(c, a) && A.le(c, b);
      if (!found) return false;
    }
  return true;
}

// Maximal elements of an element set under the algebra order, ascending ids.
inline std::vector<Elem> maximal_elements(const FinitePomonoid& A, const std::vector<Elem>& xs) {
  std::vector<Elem> out;
  for (Elem x : xs) {
    bool dominated = false;
    for (Elem y : xs)
      if (y != x && A.le(x, y)) dominated = true;
    if (!dominated) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Maximal solutions of a*x <= c (left) or x*a <= c (right).
inline std::vector<Elem> ideal_residuals(const FinitePomonoid& A, Elem a, Elem c, Side side) {
  std::vector<Elem> sols;
  for (Elem x = 0; x < A.n; ++x) {
    const Elem p = side == Side::left ? A.mul(a, x) : A.mul(x, a);
    if (A.le(p, c)) sols.push_back(x);
  }
  if (sols.empty())
    throw NotIdeallyResiduated("no solution for " + std::to_string(a) + " and " +
                               std::to_string(c));
  return maximal_elements(A, sols);
}

inline bool structure_holds(const FinitePomonoid& A, AlgebraKind kind) {
  try {
    return validate(A, kind).ok();
  } catch (const StructuralError&) {
    return false;
  }
}

namespace detail {

inline FinitePomonoid relabel(const FinitePomonoid& A, const std::vector<Elem>& perm) {
  // perm maps old id -> new id
  FinitePomonoid B = A;
  const int n = A.n;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      B.order[perm[a] * n + perm[b]] = A.order[a * n + b];
      B.product[perm[a] * n + perm[b]] = perm[A.product[a * n + b]];
      if (A.has_join()) B.joins[perm[a] * n + perm[b]] = perm[A.joins[a * n + b]];
    }
  if (A.unit) B.unit = perm[*A.unit];
  return B;
}

inline std::vector<int> encode(const FinitePomonoid& A) {
  std::vector<int> code;
  code.reserve(A.order.size() * 2 + 2);
  code.push_back(A.n);
  code.push_back(A.unit ? *A.unit : -1);
  for (char c : A.order) code.push_back(c);
  for (Elem e : A.product) code.push_back(e);
  for (Elem e : A.joins) code.push_back(e);
  return code;
}

template <class F>
void for_each_permutation(int n, std::optional<Elem> fixed, F&& f) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (fixed && perm[*fixed] != *fixed) continue;
    if (!f(perm)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Lexicographically least relabeling; the unit (if any) must map to 0.
inline FinitePomonoid canonical_relabel(const FinitePomonoid& A) {
  std::optional<FinitePomonoid> best;
  std::vector<int> best_code;
  std::vector<Elem> perm(A.n);
  std::vector<Elem> rest;
  for (Elem a = 0; a < A.n; ++a)
    if (!A.unit || a != *A.unit) rest.push_back(a);
  do {
    // build a permutation old->new, placing unit at 0
    int next = 0;
    if (A.unit) perm[*A.unit] = next++;
    for (Elem a : rest) perm[a] = next++;
    FinitePomonoid B = relabel(A, perm);
    auto code = encode(B);
    if (!best || code < best_code) {
      best = std::move(B);
      best_code = std::move(code);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return *best;
}

inline std::vector<std::vector<char>> partial_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<std::vector<char>> out;
  const std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<char> le(n * n, 0);
    for (int a = 0; a < n; ++a) le[a * n + a] = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask & (1u << k)) le[pairs[k].first * n + pairs[k].second] = 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && le[a * n + b] && le[b * n + a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (le[a * n + b] && le[b * n + c] && !le[a * n + c]) ok = false;
      }
    if (ok) out.push_back(std::move(le));
  }
  return out;
}

// All associative tables on n elements; with_unit pins element 0 as identity.
inline std::vector<std::vector<Elem>> associative_tables(int n, bool with_unit) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> t(n * n, -1);
  std::vector<int> free_cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (with_unit && (a == 0 || b == 0)) {
        t[a * n + b] = a == 0 ? b : a;
      } else {
        free_cells.push_back(a * n + b);
      }
    }
  auto consistent = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Elem ab = t[a * n + b];
        if (ab < 0) continue;
        for (int c = 0; c < n; ++c) {
          const Elem bc = t[b * n + c];
          if (bc < 0) continue;
          const Elem l = t[ab * n + c];
          const Elem r = t[a * n + bc];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == free_cells.size()) {
      out.push_back(t);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      t[free_cells[k]] = v;
      if (consistent()) self(self, k + 1);
    }
    t[free_cells[k]] = -1;
  };
  rec(rec, 0);
  return out;
}

inline bool isotone(int n, const std::vector<char>& le, const std::vector<Elem>& t) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !le[a * n + b]) continue;
      for (int c = 0; c < n; ++c) {
        if (!le[t[a * n + c] * n + t[b * n + c]]) return false;
        if (!le[t[c * n + a] * n + t[c * n + b]]) return false;
      }
    }
  return true;
}

// Attach the join table when the order is a join semilattice and the
// multiplication distributes over it.
inline bool attach_join(FinitePomonoid& A) {
  std::vector<Elem> j(A.n * A.n);
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b) {
      auto l = A.lub(a, b);
      if (!l) return false;
      j[a * A.n + b] = *l;
    }
  A.joins = std::move(j);
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b)
      for (Elem c = 0; c < A.n; ++c)
        if (A.mul(c, A.join(a, b)) != A.join(A.mul(c, a), A.mul(c, b)) ||
            A.mul(A.join(a, b), c) != A.join(A.mul(a, c), A.mul(b, c))) {
          A.joins.clear();
          return false;
        }
  return true;
}

}  // namespace detail

// A structure-preserving bijection old -> new, or nothing.
inline std::optional<std::vector<Elem>> are_isomorphic(const FinitePomonoid& A,
                                                       const FinitePomonoid& B,
                                                       AlgebraKind kind) {
  if (A.n != B.n || A.unit.has_value() != B.unit.has_value()) return std::nullopt;
  const bool with_join = (kind.structure == Structure::sl_monoid ||
                          kind.structure == Structure::residuated) &&
                         A.has_join() && B.has_join();
  std::optional<std::vector<Elem>> found;
  detail::for_each_permutation(A.n, std::nullopt, [&](const std::vector<Elem>& p) {
    if (A.unit && p[*A.unit] != *B.unit) return true;
    for (Elem a = 0; a < A.n; ++a)
      for (Elem b = 0; b < A.n; ++b) {
        if (A.le(a, b) != B.le(p[a], p[b])) return true;
        if (p[A.mul(a, b)] != B.mul(p[a], p[b])) return true;
        if (with_join && p[A.join(a, b)] != B.join(p[a], p[b])) return true;
      }
    found = p;
    return false;
  });
  return found;
}

// All algebras of the given kind on 1..n_max elements up to isomorphism, in
// a fixed order: by size, then by the least relabeled encoding.
inline std::vector<FinitePomonoid> enumerate_pomonoids(int n_max, Structure kind,
                                                       bool commutative) {
  if (n_max > 4) throw StructuralError("enumeration is capped at 4 elements");
  const bool monoid = kind != Structure::posemigroup;
  std::vector<FinitePomonoid> out;
  for (int n = 1; n <= n_max; ++n) {
    std::map<std::vector<int>, FinitePomonoid> seen;
    const auto orders = detail::partial_orders(n);
    for (const auto& table : detail::associative_tables(n, monoid)) {
      FinitePomonoid base;
      base.n = n;
      base.product = table;
      if (monoid) base.unit = 0;
      if (commutative && !base.is_commutative()) continue;
      for (const auto& le : orders) {
        if (!detail::isotone(n, le, table)) continue;
        FinitePomonoid A = base;
        A.order = le;
        if (kind == Structure::sl_monoid || kind == Structure::residuated) {
          if (!detail::attach_join(A)) continue;
          if (kind == Structure::residuated) {
            bool lattice = true;
            for (Elem a = 0; a < n && lattice; ++a)
              for (Elem b = 0; b < n && lattice; ++b) lattice = A.glb(a, b).has_value();
            if (!lattice || !is_residuated(A)) continue;
          }
        }
        FinitePomonoid C = detail::canonical_relabel(A);
        auto code = detail::encode(C);
        seen.emplace(std::move(code), std::move(C));
      }
    }
    // m pomonoid, s sl-monoid, r residuated, p posemigroup; c when restricted
    // to commutative tables
    const char* tag = kind == Structure::pomonoid      ? "m"
                      : kind == Structure::sl_monoid   ? "s"
                      : kind == Structure::residuated  ? "r"
                                                       : "p";
    int idx = 0;
    for (auto& [code, A] : seen) {
      A.name = std::string(tag) + (commutative ? "c" : "") + std::to_string(n) + "_" +
               std::to_string(idx++);
      out.push_back(std::move(A));
    }
  }
  return out;
}

inline AlgebraKind kind_of(const FinitePomonoid& A) {
  AlgebraKind k;
  if (!A.unit) k.structure = Structure::posemigroup;
  else if (A.has_join()) k.structure = Structure::sl_monoid;
  else k.structure = Structure::pomonoid;
  k.commutative = A.is_commutative();
  return k;
}

}  // namespace nucpre

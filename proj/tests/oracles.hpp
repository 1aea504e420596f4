#pragma once

// Brute-force reference implementations. None of these call the library's
// search or decision code; they only share the plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include <nucpre/algebra.hpp>
#include <nucpre/nucleus.hpp>
#include <nucpre/term.hpp>
#include <nucpre/words.hpp>

namespace oracle {

using nucpre::Elem;
using nucpre::FinitePomonoid;
using nucpre::Word;

struct CatalogCounts {
  int pomonoids = 0, commutative = 0, sl = 0, posemigroups = 0;
};

// Labelled structures on exactly n elements, deduplicated by the least
// relabelled code. Orders come from all n*n relation bitmasks.
inline CatalogCounts count_catalog(int n) {
  std::vector<std::vector<char>> orders;
  for (std::uint32_t m = 0; m < (1u << (n * n)); ++m) {
    auto r = [&](int a, int b) { return (m >> (a * n + b)) & 1u; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = r(a, a);
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && r(a, b) && r(b, a)) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (r(a, b) && r(b, c) && !r(a, c)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<char> le(n * n);
    for (int i = 0; i < n * n; ++i) le[i] = (m >> i) & 1u;
    orders.push_back(le);
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::vector<int>> pomon, comm, sl, semi;
  int cells = n * n, total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  std::vector<int> t(cells);
  for (const auto& le : orders) {
    auto leq = [&](int a, int b) { return le[a * n + b] != 0; };
    // joins, when the order is a join semilattice
    std::vector<int> join(cells, -1);
    bool semilattice = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (!leq(a, c) || !leq(b, c)) continue;
          bool least = true;
          for (int d = 0; d < n; ++d)
            if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
          if (least) join[a * n + b] = c;
        }
        if (join[a * n + b] < 0) semilattice = false;
      }
    for (int code = 0; code < total; ++code) {
      for (int i = 0, c = code; i < cells; ++i, c /= n) t[i] = c % n;
      auto mul = [&](int a, int b) { return t[a * n + b]; };
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          for (int c = 0; c < n && ok; ++c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) ok = false;
            if (leq(a, b) && (!leq(mul(a, c), mul(b, c)) || !leq(mul(c, a), mul(c, b)))) ok = false;
          }
      if (!ok) continue;
      bool commutative = true;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) commutative = commutative && mul(a, b) == mul(b, a);
      bool distributes = semilattice;
      for (int a = 0; a < n && distributes; ++a)
        for (int b = 0; b < n && distributes; ++b)
          for (int c = 0; c < n && distributes; ++c)
            distributes = mul(a, join[b * n + c]) == join[mul(a, b) * n + mul(a, c)] &&
                          mul(join[b * n + c], a) == join[mul(b, a) * n + mul(c, a)];

      auto code_of = [&](const std::vector<int>& q, int unit) {
        // q maps old labels to new ones
        std::vector<int> inv(n), out(2 * cells + 1);
        for (int i = 0; i < n; ++i) inv[q[i]] = i;
        out[0] = unit < 0 ? -1 : q[unit];
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            out[1 + a * n + b] = le[inv[a] * n + inv[b]];
            out[1 + cells + a * n + b] = q[mul(inv[a], inv[b])];
          }
        return out;
      };
      auto canonical = [&](int unit) {
        std::vector<int> best;
        for (const auto& q : perms) {
          auto c = code_of(q, unit);
          if (best.empty() || c < best) best = c;
        }
        return best;
      };

      semi.insert(canonical(-1));
      for (int e = 0; e < n; ++e) {
        bool unit = true;
        for (int a = 0; a < n; ++a) unit = unit && mul(e, a) == a && mul(a, e) == a;
        if (!unit) continue;
        auto c = canonical(e);
        pomon.insert(c);
        if (commutative) comm.insert(c);
        if (distributes) sl.insert(c);
      }
    }
  }
  return {static_cast<int>(pomon.size()), static_cast<int>(comm.size()),
          static_cast<int>(sl.size()), static_cast<int>(semi.size())};
}

// Every map n -> n, filtered by the closure operator and nucleus laws.
inline std::vector<std::vector<Elem>> naive_nuclei(const FinitePomonoid& A, bool co = false) {
  const int n = A.n;
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> m(n, 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = (co ? A.le(m[a], a) : A.le(a, m[a])) && m[m[a]] == m[a];
      for (int b = 0; b < n && ok; ++b) {
        if (A.le(a, b) && !A.le(m[a], m[b])) ok = false;
        if (!A.le(A.mul(m[a], m[b]), m[A.mul(a, b)])) ok = false;
      }
    }
    if (ok && co && A.unit && m[*A.unit] != *A.unit) ok = false;
    if (ok) out.push_back(m);
    int i = 0;
    while (i < n && ++m[i] == n) m[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline Elem product(const FinitePomonoid& A, const std::vector<Elem>& ws, std::size_t from,
                    std::size_t to) {
  Elem acc = A.unit ? *A.unit : -1;
  for (std::size_t i = from; i < to; ++i) acc = acc < 0 ? ws[i] : A.mul(acc, ws[i]);
  return acc;
}

// u below v = [a1..an]: u cut into n consecutive blocks (empty ones allowed
// iff allow_empty) with product(block i) <= a_i. An empty block stands for 1.
inline bool word_le_sequence(const FinitePomonoid& A, const Word& u, const Word& v,
                             bool allow_empty) {
  const std::size_t n = v.size(), m = u.size();
  if (n == 0) return m == 0;
  std::vector<std::size_t> cut(n + 1, 0);
  cut[n] = m;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (cut[k] == cut[k + 1]) {
          if (!allow_empty || !A.unit || !A.le(*A.unit, v[k])) return false;
        } else if (!A.le(product(A, u.letters, cut[k], cut[k + 1]), v[k])) {
          return false;
        }
      }
      return true;
    }
    for (std::size_t c = cut[i - 1]; c <= m; ++c) {
      cut[i] = c;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(1);
}

// Commutative: some ordering of u's letters satisfies the sequence form.
inline bool word_le_multiset(const FinitePomonoid& A, Word u, const Word& v, bool allow_empty) {
  std::sort(u.letters.begin(), u.letters.end());
  do
    if (word_le_sequence(A, u, v, allow_empty)) return true;
  while (std::next_permutation(u.letters.begin(), u.letters.end()));
  return false;
}

inline bool word_le(const FinitePomonoid& A, const Word& u, const Word& v, nucpre::PreimageVariant var) {
  const bool empty = var.shape != nucpre::Shape::semigroup;
  return var.commutative ? word_le_multiset(A, u, v, empty) : word_le_sequence(A, u, v, empty);
}

// Recursive term evaluation, independent of the postfix compiler.
inline Elem eval(const nucpre::Term& t, const FinitePomonoid& A, const std::vector<Elem>* g,
                 const std::vector<Elem>& env) {
  using Op = nucpre::Term::Op;
  switch (t.op) {
    case Op::var: return env[t.var];
    case Op::one: return *A.unit;
    case Op::gamma: return (*g)[eval(t.args[0], A, g, env)];
    case Op::mul: return A.mul(eval(t.args[0], A, g, env), eval(t.args[1], A, g, env));
    case Op::join: return A.join(eval(t.args[0], A, g, env), eval(t.args[1], A, g, env));
  }
  return -1;
}

inline bool valid(const nucpre::QuasiInequality& phi, const FinitePomonoid& A,
                  const std::vector<Elem>* g) {
  const int k = phi.var_count();
  std::vector<Elem> env(k, 0);
  while (true) {
    bool prem = true;
    for (const auto& p : phi.premises) prem = prem && A.le(eval(p.lhs, A, g, env), eval(p.rhs, A, g, env));
    if (prem && !A.le(eval(phi.conclusion.lhs, A, g, env), eval(phi.conclusion.rhs, A, g, env)))
      return false;
    int i = 0;
    while (i < k && ++env[i] == A.n) env[i++] = 0;
    if (i == k) return true;
  }
}

// Downsets of a finite poset as bitmasks.
using Down = std::uint32_t;

inline Down down_of(const FinitePomonoid& A, const std::vector<Elem>& xs) {
  Down d = 0;
  for (Elem x : xs)
    for (Elem y = 0; y < A.n; ++y)
      if (A.le(y, x)) d |= 1u << y;
  return d;
}

inline std::vector<Down> all_downsets(const FinitePomonoid& A) {
  std::vector<Down> out;
  for (Down d = 0; d < (1u << A.n); ++d) {
    bool closed = true;
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y)
        if ((d >> x & 1u) && A.le(y, x) && !(d >> y & 1u)) closed = false;
    if (closed) out.push_back(d);
  }
  return out;
}

inline Down down_product(const FinitePomonoid& A, Down x, Down y) {
  std::vector<Elem> ps;
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b)
      if ((x >> a & 1u) && (y >> b & 1u)) ps.push_back(A.mul(a, b));
  return down_of(A, ps);
}

// Largest downset z with x*z inside y (left) or z*x inside y (right).
inline Down down_residual(const FinitePomonoid& A, Down x, Down y, nucpre::Side side) {
  Down z = 0;
  for (Elem c = 0; c < A.n; ++c) {
    bool ok = true;
    for (Elem a = 0; a < A.n; ++a)
      if (x >> a & 1u) {
        Elem p = side == nucpre::Side::left ? A.mul(a, c) : A.mul(c, a);
        ok = ok && (y >> p & 1u);
      }
    if (ok) z |= 1u << c;
  }
  return z;
}

// Every bijection, for isomorphism checks.
inline bool isomorphic(const FinitePomonoid& A, const FinitePomonoid& B) {
  if (A.n != B.n || A.unit.has_value() != B.unit.has_value()) return false;
  std::vector<Elem> p(A.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = !A.unit || p[*A.unit] == *B.unit;
    for (Elem a = 0; a < A.n && ok; ++a)
      for (Elem b = 0; b < A.n && ok; ++b)
        ok = A.le(a, b) == B.le(p[a], p[b]) && p[A.mul(a, b)] == B.mul(p[a], p[b]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle

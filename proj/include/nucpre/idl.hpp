#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "nucleus.hpp"
#include "words.hpp"

namespace nucpre {

// A finitely generated downset, stored as its maximal generators in
// ascending carrier order.
template <class T>
struct Antichain {
  std::vector<T> gens;
  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend auto operator<=>(const Antichain& x, const Antichain& y) {
    if (x.gens.size() != y.gens.size()) return x.gens.size() <=> y.gens.size();
    return x.gens <=> y.gens;
  }
};

// Carrier over the elements of a finite algebra.
class ElementCarrier {
 public:
  using value_type = Elem;
  explicit ElementCarrier(FinitePomonoid A) : A_(std::move(A)) { A_.check_shape(); }

  const FinitePomonoid& algebra() const { return A_; }
  bool le(Elem a, Elem b) const { return A_.le(a, b); }
  Elem mul(Elem a, Elem b) const { return A_.mul(a, b); }
  Elem one() const { return A_.one(); }
  std::vector<Elem> elements() const {
    std::vector<Elem> xs(A_.n);
    for (Elem a = 0; a < A_.n; ++a) xs[a] = a;
    return xs;
  }
  std::vector<Elem> meet_candidates(const std::vector<Elem>&, const std::vector<Elem>&) const {
    return elements();
  }
  std::vector<Elem> ideal_residual(Elem x, Elem z, Side side) const {
    return ideal_residuals(A_, x, z, side);
  }

 private:
  FinitePomonoid A_;
};

// Carrier over canonical words of the unital preimage, with products and
// meet candidates confined to a length budget.
class WordCarrier {
 public:
  using value_type = Word;

  WordCarrier(FreePreimage pre, int budget) : pre_(std::move(pre)), budget_(budget) {
    if (pre_.variant().shape != Shape::unital)
      throw StructuralError("Id over words uses the unital variant");
    down_directed_ = is_down_directed(pre_.base());
  }

  const FreePreimage& preimage() const { return pre_; }
  int budget() const { return budget_; }

  bool le(const Word& u, const Word& v) const { return pre_.le(u, v); }

  Word mul(const Word& u, const Word& v) const {
    Word w = pre_.canonical(pre_.compose(u, v));
    if (static_cast<int>(w.size()) > budget_)
      throw BudgetExceeded("product of " + std::to_string(u.size()) + " and " +
                           std::to_string(v.size()) + " letters leaves budget " +
                           std::to_string(budget_));
    return w;
  }

  Word one() const { return Word{pre_.base().one()}; }

  // Canonical words of length <= len, computed once per length.
  const std::vector<Word>& canonical_words(int len) const {
    if (len > budget_)
      throw BudgetExceeded("need words of length " + std::to_string(len) + " within budget " +
                           std::to_string(budget_));
    auto it = by_length_.find(len);
    if (it != by_length_.end()) return it->second;
    std::map<Word, char> seen;
    for (const Word& w : pre_.words(len)) {
      Word c = pre_.canonical(w);
      if (static_cast<int>(c.size()) <= len) seen.emplace(std::move(c), 0);
    }
    std::vector<Word> out;
    for (auto& [w, _] : seen) out.push_back(w);
    return by_length_.emplace(len, std::move(out)).first->second;
  }

  // Any common lower bound of u and v lies below one whose length is at most
  // |u|+|v|-1 (|u|*|v| for multisets), so those lengths suffice.
  std::vector<Word> meet_candidates(const std::vector<Word>& xs, const std::vector<Word>& ys) const {
    if (!down_directed_) throw NotDownDirected("base has two elements without a lower bound");
    int bound = 1;
    for (const Word& x : xs)
      for (const Word& y : ys) {
        const int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
        bound = std::max(bound, pre_.variant().commutative ? m * n : m + n - 1);
      }
    return canonical_words(bound);
  }

  // Maximal x-solutions of u.x <= z; each solution is dominated by one of
  // length at most |z| obtained by multiplying out its blocks.
  std::vector<Word> ideal_residual(const Word& u, const Word& z, Side side) const {
    std::vector<Word> sols;
    const int len = std::max<int>(1, static_cast<int>(z.size()));
    for (const Word& x : canonical_words(len)) {
      const Word lhs = side == Side::left ? pre_.compose(u, x) : pre_.compose(x, u);
      if (pre_.le(lhs, z)) sols.push_back(x);
    }
    if (sols.empty()) throw NotIdeallyResiduated("no word solves the residual inequality");
    return sols;
  }

 private:
  FreePreimage pre_;
  int budget_;
  bool down_directed_ = false;
  mutable std::map<int, std::vector<Word>> by_length_;
};

template <class C>
class IdAlgebra {
 public:
  using T = typename C::value_type;
  using AC = Antichain<T>;

  explicit IdAlgebra(C carrier) : c_(std::move(carrier)) {}
  const C& carrier() const { return c_; }

  AC normalize(std::vector<T> xs) const {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    AC out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < xs.size() && !dominated; ++j) {
        if (i == j || !c_.le(xs[i], xs[j])) continue;
        // equivalent elements keep the earlier one
        dominated = !c_.le(xs[j], xs[i]) || j < i;
      }
      if (!dominated) out.gens.push_back(xs[i]);
    }
    return out;
  }

  AC down(const T& a) const { return AC{{a}}; }
  AC unit() const { return down(c_.one()); }

  AC join(const AC& x, const AC& y) const {
    std::vector<T> xs = x.gens;
    xs.insert(xs.end(), y.gens.begin(), y.gens.end());
    return normalize(std::move(xs));
  }

  bool le(const AC& x, const AC& y) const {
    for (const T& a : x.gens) {
      bool below = false;
      for (const T& b : y.gens)
        if (c_.le(a, b)) {
          below = true;
          break;
        }
      if (!below) return false;
    }
    return true;
  }

  bool equal(const AC& x, const AC& y) const { return le(x, y) && le(y, x); }

  AC mult(const AC& x, const AC& y) const {
    std::vector<T> xs;
    for (const T& a : x.gens)
      for (const T& b : y.gens) xs.push_back(c_.mul(a, b));
    return normalize(std::move(xs));
  }

  AC meet(const AC& x, const AC& y) const {
    if (le(x, y)) return x;
    if (le(y, x)) return y;
    std::vector<T> xs;
    for (const T& t : c_.meet_candidates(x.gens, y.gens)) {
      if (below_some(t, x) && below_some(t, y)) xs.push_back(t);
    }
    if (xs.empty()) throw NotDownDirected("empty intersection of downsets");
    return normalize(std::move(xs));
  }

  // X \ Y (side left) or Y / X (side right): the largest Z with X*Z <= Y,
  // resp. Z*X <= Y.
  AC residual(const AC& x, const AC& y, Side side) const {
    std::optional<AC> acc;
    for (const T& a : x.gens) {
      std::vector<T> xs;
      // a single generator of y may admit no solution while another does
      for (const T& z : y.gens) {
        try {
          auto part = c_.ideal_residual(a, z, side);
          xs.insert(xs.end(), part.begin(), part.end());
        } catch (const NotIdeallyResiduated&) {
        }
      }
      if (xs.empty()) throw NotIdeallyResiduated("no solution below any generator");
      AC r = normalize(std::move(xs));
      acc = acc ? meet(*acc, r) : r;
    }
    return *acc;
  }

 private:
  bool below_some(const T& t, const AC& x) const {
    for (const T& b : x.gens)
      if (c_.le(t, b)) return true;
    return false;
  }

  C c_;
};

// gamma^Id on a finite sl-monoid with a nucleus: the single generator
// g(x1) v_g ... v_g g(xn).
inline Antichain<Elem> gamma_id(const FinitePomonoid& A, const Nucleus& g,
                                const Antichain<Elem>& x) {
  if (!A.has_join()) throw StructuralError("gamma on Id needs base joins");
  Elem acc = g(x.gens.front());
  for (std::size_t i = 1; i < x.gens.size(); ++i) acc = g(A.join(acc, g(x.gens[i])));
  return Antichain<Elem>{{acc}};
}

// gamma^Id over words: [g(u1) v ... v g(un)] with g the word evaluation.
inline Antichain<Word> gamma_id(const FreePreimage& pre, const Antichain<Word>& x) {
  const FinitePomonoid& M = pre.base();
  if (!M.has_join()) throw StructuralError("gamma on Id needs base joins");
  Elem acc = pre.gamma(x.gens.front());
  for (std::size_t i = 1; i < x.gens.size(); ++i) acc = M.join(acc, pre.gamma(x.gens[i]));
  return Antichain<Word>{{Word{acc}}};
}

// Every non-empty antichain of a finite carrier, ordered by size then ids.
inline std::vector<Antichain<Elem>> all_antichains(const ElementCarrier& c) {
  const int n = c.algebra().n;
  std::vector<Antichain<Elem>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Antichain<Elem> x;
    for (Elem a = 0; a < n; ++a)
      if (mask & (1u << a)) x.gens.push_back(a);
    bool anti = true;
    for (Elem a : x.gens)
      for (Elem b : x.gens)
        if (a != b && c.le(a, b)) anti = false;
    if (anti) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Antichains with at most max_gens generators drawn from the given words.
template <class C>
std::vector<Antichain<Word>> small_antichains(const IdAlgebra<C>& id, const std::vector<Word>& ws,
                                              int max_gens) {
  std::vector<Antichain<Word>> out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    out.push_back(Antichain<Word>{{ws[i]}});
    if (max_gens < 2) continue;
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      if (id.carrier().le(ws[i], ws[j]) || id.carrier().le(ws[j], ws[i])) continue;
      out.push_back(Antichain<Word>{{ws[i], ws[j]}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class AC>
struct DistributivityWitness {
  AC a, b, c;
};

// a <= b v c must give a <= b, a <= c, or a = b' v c' with b' <= b, c' <= c,
// where b' and c' range over the supplied elements.
template <class Id, class AC>
std::optional<DistributivityWitness<AC>> check_distributive_semilattice(const Id& id,
                                                                        const std::vector<AC>& xs) {
  for (const AC& a : xs)
    for (const AC& b : xs)
      for (const AC& c : xs) {
        if (!id.le(a, id.join(b, c)) || id.le(a, b) || id.le(a, c)) continue;
        bool split = false;
        for (const AC& b2 : xs) {
          if (!id.le(b2, b)) continue;
          for (const AC& c2 : xs) {
            if (!id.le(c2, c)) continue;
            if (id.equal(id.join(b2, c2), a)) {
              split = true;
              break;
            }
          }
          if (split) break;
        }
        if (!split) return DistributivityWitness<AC>{a, b, c};
      }
  return std::nullopt;
}

struct MeetDistributionWitness {
  Antichain<Word> x, y, z;
  Side side;
};

// x*(y meet z) = x*y meet x*z and (x meet y)*z = x*z meet y*z over antichains
// of at most two generators of length <= L/2. Products and meets are
// computed with a budget large enough for the meet length bound.
inline std::optional<MeetDistributionWitness> check_meet_distribution(const FreePreimage& pre,
                                                                      int L) {
  if (!is_integral(pre.base())) throw StructuralError("meet distribution assumes an integral base");
  const int h = std::max(1, L / 2);
  const bool comm = pre.variant().commutative;
  const int meet_len = comm ? 4 * h * h : 4 * h - 1;
  IdAlgebra<WordCarrier> id(WordCarrier(pre, std::max(meet_len, 3 * h)));
  const auto gens = id.carrier().canonical_words(h);
  const auto xs = small_antichains(id, gens, 2);
  using AC = Antichain<Word>;
  std::map<std::pair<AC, AC>, AC> meets, prods;
  auto meet = [&](const AC& a, const AC& b) {
    auto key = std::make_pair(a, b);
    auto it = meets.find(key);
    if (it != meets.end()) return it->second;
    return meets.emplace(key, id.meet(a, b)).first->second;
  };
  auto mult = [&](const AC& a, const AC& b) {
    auto key = std::make_pair(a, b);
    auto it = prods.find(key);
    if (it != prods.end()) return it->second;
    return prods.emplace(key, id.mult(a, b)).first->second;
  };
  for (const AC& x : xs)
    for (const AC& y : xs)
      for (const AC& z : xs) {
        if (!id.equal(mult(x, meet(y, z)), meet(mult(x, y), mult(x, z))))
          return MeetDistributionWitness{x, y, z, Side::left};
        if (!id.equal(mult(meet(x, y), z), meet(mult(x, z), mult(y, z))))
          return MeetDistributionWitness{x, y, z, Side::right};
      }
  return std::nullopt;
}

struct FragmentCancelWitness {
  Antichain<Word> x, y, z;  // x*z <= y*z (or z*x <= z*y) with x not below y
  Side side;
};

// Order cancellativity of Id over the fragment: antichains of at most
// max_gens generators of length <= L/2, so every product stays within L.
inline std::optional<FragmentCancelWitness> check_fragment_cancellativity(const FreePreimage& pre,
                                                                          int L, int max_gens = 2) {
  const int h = std::max(1, L / 2);
  IdAlgebra<WordCarrier> id(WordCarrier(pre, L));
  const auto xs = small_antichains(id, id.carrier().canonical_words(h), max_gens);
  using AC = Antichain<Word>;
  const std::size_t k = xs.size();
  std::vector<AC> prod(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i * k + j] = id.mult(xs[i], xs[j]);
  std::vector<char> below(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) below[i * k + j] = id.le(xs[i], xs[j]);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (below[x * k + y]) continue;
      for (std::size_t z = 0; z < k; ++z) {
        if (id.le(prod[x * k + z], prod[y * k + z])) return FragmentCancelWitness{xs[x], xs[y], xs[z], Side::right};
        if (id.le(prod[z * k + x], prod[z * k + y])) return FragmentCancelWitness{xs[x], xs[y], xs[z], Side::left};
      }
    }
  return std::nullopt;
}

}  // namespace nucpre

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"

namespace nucpre {

// A word over the carrier of a base algebra. Ordered by length first, then
// lexicographically, which is the tiebreak used for antichains.
struct Word {
  std::vector<Elem> letters;

  Word() = default;
  Word(std::initializer_list<Elem> xs) : letters(xs) {}
  explicit Word(std::vector<Elem> xs) : letters(std::move(xs)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Elem operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() <=> y.size();
    return x.letters <=> y.letters;
  }
};

inline Word cat(const Word& u, const Word& v) {
  Word w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

inline Word cat(const Word& u, const Word& v, const Word& w) { return cat(cat(u, v), w); }

inline Word power(const Word& w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out = cat(out, w);
  return out;
}

enum class Shape { monoid, unital, semigroup };

struct PreimageVariant {
  Shape shape = Shape::unital;
  bool commutative = false;
  friend bool operator==(const PreimageVariant&, const PreimageVariant&) = default;
};

// Every word of length min_len..max_len; multisets (sorted words) when
// commutative. Order: by length, then lexicographic.
inline std::vector<Word> all_words(int alphabet, int min_len, int max_len, bool commutative) {
  std::vector<Word> out;
  for (int len = min_len; len <= max_len; ++len) {
    std::vector<Elem> cur(len, 0);
    auto rec = [&](auto&& self, int pos, Elem lo) -> void {
      if (pos == len) {
        out.emplace_back(cur);
        return;
      }
      for (Elem a = commutative ? lo : 0; a < alphabet; ++a) {
        cur[pos] = a;
        self(self, pos + 1, a);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

// The free nuclear preimage of a finite base in one of its six flavours.
// Holds the base by value; every member is a pure function of its inputs.
class FreePreimage {
 public:
  FreePreimage(FinitePomonoid base, PreimageVariant variant)
      : base_(std::move(base)), variant_(variant) {
    base_.check_shape();
    if (variant_.shape != Shape::semigroup && !base_.unit)
      throw StructuralError("monoid variants need a base with a unit");
    if (variant_.commutative && !base_.is_commutative())
      throw StructuralError("commutative variant needs a commutative base");
    integral_ = base_.unit && is_integral(base_);
  }

  const FinitePomonoid& base() const { return base_; }
  PreimageVariant variant() const { return variant_; }
  int min_length() const { return variant_.shape == Shape::monoid ? 0 : 1; }

  void check(const Word& u) const {
    for (Elem a : u.letters)
      if (a < 0 || a >= base_.n) throw StructuralError("letter out of range");
    if (u.empty() && variant_.shape == Shape::semigroup)
      throw StructuralError("the empty word is not in the semigroup variant");
  }

  Elem gamma(const Word& u) const {
    if (u.empty()) {
      if (variant_.shape == Shape::semigroup)
        throw StructuralError("the empty word is not in the semigroup variant");
      return base_.one();
    }
    Elem p = u[0];
    for (std::size_t i = 1; i < u.size(); ++i) p = base_.mul(p, u[i]);
    return p;
  }

  // Concatenation; sorted in the commutative variants.
  Word compose(const Word& u, const Word& v) const {
    Word w = cat(u, v);
    if (variant_.commutative) std::sort(w.letters.begin(), w.letters.end());
    return w;
  }

  bool le(const Word& u, const Word& v) const {
    if (v.empty()) return u.empty();
    return variant_.commutative ? le_multiset(u, v) : le_sequence(u, v);
  }

  bool equiv(const Word& u, const Word& v) const { return le(u, v) && le(v, u); }

  Word embed(Elem a) const { return Word{a}; }

  Word nucleus_map(const Word& u) const { return Word{gamma(u)}; }

  // [gamma(u) \ a] for side left, [a / gamma(u)] for side right.
  std::optional<Word> residual_by_singleton(const Word& u, Elem a, Side side) const {
    auto r = base_.residual(gamma(u), a, side);
    if (!r) return std::nullopt;
    return Word{*r};
  }

  // The unique shortest equivalent word. Integral monoid bases drop unit
  // letters; the semigroup preorder is antisymmetric so words are their own
  // representatives; otherwise shorter words are searched exhaustively.
  Word canonical(const Word& raw) const {
    Word u = raw;
    if (variant_.commutative) std::sort(u.letters.begin(), u.letters.end());
    if (variant_.shape == Shape::unital && u.empty()) return Word{base_.one()};
    if (variant_.shape == Shape::semigroup) return u;
    if (integral_) {
      if (u.empty()) return u;
      Word r;
      for (Elem a : u.letters)
        if (a != *base_.unit) r.letters.push_back(a);
      if (r.empty()) r.letters.push_back(*base_.unit);
      return r;
    }
    return canonical_by_search(u);
  }

  Word canonical_by_search(const Word& u) const {
    const int len = static_cast<int>(u.size());
    for (int k = min_length(); k < len; ++k)
      for (const Word& w : all_words(base_.n, k, k, variant_.commutative))
        if (equiv(w, u)) return w;
    return u;
  }

  std::vector<Word> words(int max_len) const {
    return all_words(base_.n, min_length(), max_len, variant_.commutative);
  }

 private:
  bool le_sequence(const Word& u, const Word& v) const {
    const int m = static_cast<int>(u.size());
#ifdef NUCPRE_MUTATE_WORD_LE
    // deliberately wrong build used by the harness mutation run
    const bool allow_empty = false;
#else
    const bool allow_empty = variant_.shape != Shape::semigroup;
#endif
    // block[k][i]: product of u[k..i), k < i
    std::vector<Elem> block(static_cast<std::size_t>((m + 1) * (m + 1)), -1);
    for (int k = 0; k < m; ++k) {
      Elem p = u[k];
      block[k * (m + 1) + k + 1] = p;
      for (int i = k + 2; i <= m; ++i) {
        p = base_.mul(p, u[i - 1]);
        block[k * (m + 1) + i] = p;
      }
    }
    std::vector<char> reach(m + 1, 0), next(m + 1, 0);
    reach[0] = 1;
    for (Elem a : v.letters) {
      std::fill(next.begin(), next.end(), 0);
      for (int k = 0; k <= m; ++k) {
        if (!reach[k]) continue;
        if (allow_empty && base_.le(*base_.unit, a)) next[k] = 1;
        for (int i = k + 1; i <= m; ++i)
          if (base_.le(block[k * (m + 1) + i], a)) next[i] = 1;
      }
      std::swap(reach, next);
    }
    return reach[m] != 0;
  }

  bool le_multiset(const Word& u, const Word& v) const {
    const int n = base_.n;
    std::vector<int> counts(n, 0);
    for (Elem a : u.letters) ++counts[a];
    const int radix = static_cast<int>(u.size()) + 1;
    std::unordered_map<std::uint64_t, bool> memo;
    auto key = [&](const std::vector<int>& c, std::size_t j) {
      std::uint64_t k = j;
      for (int x : c) k = k * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(x);
      return k;
    };
    const bool allow_empty = variant_.shape != Shape::semigroup;
    auto product_of = [&](const std::vector<int>& take) -> std::optional<Elem> {
      std::optional<Elem> p;
      for (Elem a = 0; a < n; ++a)
        for (int t = 0; t < take[a]; ++t) p = p ? base_.mul(*p, a) : a;
      return p;
    };
    auto rec = [&](auto&& self, std::vector<int>& rest, std::size_t j) -> bool {
      const Elem target = v[j];
      if (j + 1 == v.size()) {
        auto p = product_of(rest);
        if (!p) return allow_empty && base_.le(*base_.unit, target);
        return base_.le(*p, target);
      }
      const auto k = key(rest, j);
      if (auto it = memo.find(k); it != memo.end()) return it->second;
      bool result = false;
      std::vector<int> take(n, 0);
      auto choose = [&](auto&& chooser, int letter) -> bool {
        if (letter == n) {
          auto p = product_of(take);
          if (!p) {
            if (!allow_empty || !base_.le(*base_.unit, target)) return false;
          } else if (!base_.le(*p, target)) {
            return false;
          }
          for (Elem a = 0; a < n; ++a) rest[a] -= take[a];
          const bool ok = self(self, rest, j + 1);
          for (Elem a = 0; a < n; ++a) rest[a] += take[a];
          return ok;
        }
        for (int t = 0; t <= rest[letter]; ++t) {
          take[letter] = t;
          if (chooser(chooser, letter + 1)) {
            take[letter] = 0;
            return true;
          }
        }
        take[letter] = 0;
        return false;
      };
      result = choose(choose, 0);
      memo.emplace(k, result);
      return result;
    };
    return rec(rec, counts, 0);
  }

  FinitePomonoid base_;
  PreimageVariant variant_;
  bool integral_ = false;
};

// Canonical words of length <= L with the preorder tabulated. Indices follow
// the (length, lexicographic) order of the words.
class WordFragment {
 public:
  WordFragment(const FreePreimage& pre, int budget) : budget_(budget) {
    std::map<Word, int> seen;
    for (const Word& w : pre.words(budget)) seen.emplace(pre.canonical(w), 0);
    for (auto& [w, idx] : seen) {
      if (static_cast<int>(w.size()) > budget) continue;
      idx = static_cast<int>(words_.size());
      words_.push_back(w);
    }
    for (const auto& w : words_) index_.emplace(w, static_cast<int>(index_.size()));
    const int k = size();
    table_.assign(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) table_[i * k + j] = pre.le(words_[i], words_[j]);
  }

  int size() const { return static_cast<int>(words_.size()); }
  int budget() const { return budget_; }
  const Word& word(int i) const { return words_[i]; }
  const std::vector<Word>& words() const { return words_; }
  bool le(int i, int j) const { return table_[i * size() + j] != 0; }
  std::optional<int> find(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<int> maximal(const std::vector<int>& xs) const {
    std::vector<int> out;
    for (int x : xs) {
      bool dominated = false;
      for (int y : xs)
        if (y != x && le(x, y) && !le(y, x)) dominated = true;
      if (!dominated) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<int> minimal(const std::vector<int>& xs) const {
    std::vector<int> out;
    for (int x : xs) {
      bool dominated = false;
      for (int y : xs)
        if (y != x && le(y, x) && !le(x, y)) dominated = true;
      if (!dominated) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<int> all() const {
    std::vector<int> xs(size());
    for (int i = 0; i < size(); ++i) xs[i] = i;
    return xs;
  }

 private:
  int budget_;
  std::vector<Word> words_;
  std::map<Word, int> index_;
  std::vector<char> table_;
};

struct LimitedCancelWitness {
  Word u, w;
  Side side;
};

// Searches w <= u.w (side left) or w <= w.u (side right) with e not below u.
// Templated on the preorder so that test fixtures can swap in a faulty one.
template <class Pre>
std::optional<LimitedCancelWitness> check_limited_cancellativity(const Pre& pre, int L) {
  const auto shape = pre.variant().shape;
  const auto ws = pre.words(L);
  auto unit_below = [&](const Word& u) {
    if (shape == Shape::semigroup) return false;
    if (shape == Shape::monoid) return pre.le(Word{}, u);
    return pre.le(Word{pre.base().one()}, u);
  };
  for (const Word& u : ws) {
    if (unit_below(u)) continue;
    for (const Word& w : ws) {
      if (pre.le(w, pre.compose(u, w))) return LimitedCancelWitness{u, w, Side::left};
      if (pre.le(w, pre.compose(w, u))) return LimitedCancelWitness{u, w, Side::right};
    }
  }
  return std::nullopt;
}

struct CancelWitness {
  Elem a;
  Word u, v;
  Side side;
};

// Searches [a].u <= [a].v (and u.[a] <= v.[a]) with u not below v; singleton
// factors suffice for the full cancellativity question.
template <class Pre>
std::optional<CancelWitness> check_left_cancellativity(const Pre& pre, int L) {
  if (pre.variant().shape == Shape::monoid)
    throw StructuralError("cancellativity is asked of the unital or semigroup variant");
  const auto ws = pre.words(L);
  const FinitePomonoid& M = pre.base();
  for (const Word& u : ws)
    for (const Word& v : ws) {
      if (pre.le(u, v)) continue;
      for (Elem a = 0; a < M.n; ++a) {
        const Word s{a};
        if (pre.le(pre.compose(s, u), pre.compose(s, v))) return CancelWitness{a, u, v, Side::left};
        if (pre.le(pre.compose(u, s), pre.compose(v, s)))
          return CancelWitness{a, u, v, Side::right};
      }
    }
  return std::nullopt;
}

}  // namespace nucpre

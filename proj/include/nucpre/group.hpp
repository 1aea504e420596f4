#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "words.hpp"

namespace nucpre {

struct Letter {
  Elem elem = 0;
  bool negative = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Words over letters [a] and [a]^-1; the empty word is the group unit.
struct SignedWord {
  std::vector<Letter> letters;

  SignedWord() = default;
  explicit SignedWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int rank() const {
    return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                          [](const Letter& l) { return l.negative; }));
  }
  bool is_positive() const { return rank() == 0; }

  friend auto operator<=>(const SignedWord& x, const SignedWord& y) {
    if (x.size() != y.size()) return x.size() <=> y.size();
    return x.letters <=> y.letters;
  }
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

inline SignedWord positive(const Word& u) {
  SignedWord s;
  for (Elem a : u.letters) s.letters.push_back({a, false});
  return s;
}

// u^-1 = [a_n]^-1 ... [a_1]^-1
inline SignedWord inverse(const Word& u) {
  SignedWord s;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) s.letters.push_back({*it, true});
  return s;
}

inline SignedWord cat(const SignedWord& x, const SignedWord& y) {
  SignedWord s = x;
  s.letters.insert(s.letters.end(), y.letters.begin(), y.letters.end());
  return s;
}

inline SignedWord cat(const SignedWord& x, const SignedWord& y, const SignedWord& z) {
  return cat(cat(x, y), z);
}

// The letters of the positive letters, in order.
inline Word positive_part(const SignedWord& s) {
  Word u;
  for (const Letter& l : s.letters)
    if (!l.negative) u.letters.push_back(l.elem);
  return u;
}

inline Word as_positive(const SignedWord& s) {
  if (!s.is_positive()) throw StructuralError("signed word has negative letters");
  return positive_part(s);
}

enum class Rule { pos_mono, neg_mono, contraction, expansion, perm_left, perm_right };

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::pos_mono: return "pos-mono";
    case Rule::neg_mono: return "neg-mono";
    case Rule::contraction: return "contraction";
    case Rule::expansion: return "expansion";
    case Rule::perm_left: return "perm-left";
    case Rule::perm_right: return "perm-right";
  }
  return "?";
}

// One rewrite at offset `at` of the current word. Redex and result by rule:
//   pos-mono     u         -> v           if u <= v
//   neg-mono     u^-1      -> v^-1        if v <= u
//   contraction  u^-1 v w^-1 -> x         if v <= u x w
//   expansion    x -> u^-1 v w^-1         if u x w <= v
//   perm-left    u v^-1    -> x^-1 y      if x u <= y v
//   perm-right   u^-1 v    -> x y^-1      if v y <= u x
// Side conditions are read in the unital word preorder, with the empty word
// standing for [1].
struct ProofStep {
  Rule rule = Rule::pos_mono;
  std::size_t at = 0;
  Word u, v, w, x, y;
  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

inline SignedWord redex(const ProofStep& s) {
  switch (s.rule) {
    case Rule::pos_mono: return positive(s.u);
    case Rule::neg_mono: return inverse(s.u);
    case Rule::contraction: return cat(inverse(s.u), positive(s.v), inverse(s.w));
    case Rule::expansion: return positive(s.x);
    case Rule::perm_left: return cat(positive(s.u), inverse(s.v));
    case Rule::perm_right: return cat(inverse(s.u), positive(s.v));
  }
  return {};
}

inline SignedWord contractum(const ProofStep& s) {
  switch (s.rule) {
    case Rule::pos_mono: return positive(s.v);
    case Rule::neg_mono: return inverse(s.v);
    case Rule::contraction: return positive(s.x);
    case Rule::expansion: return cat(inverse(s.u), positive(s.v), inverse(s.w));
    case Rule::perm_left: return cat(inverse(s.x), positive(s.y));
    case Rule::perm_right: return cat(positive(s.x), inverse(s.y));
  }
  return {};
}

struct Proof {
  SignedWord start;
  std::vector<ProofStep> steps;
  SignedWord end;
};

inline SignedWord apply_step(const SignedWord& cur, const ProofStep& s) {
  const SignedWord r = redex(s);
  if (s.at > cur.size() || s.at + r.size() > cur.size())
    throw StructuralError("proof step offset out of range");
  SignedWord out;
  out.letters.assign(cur.letters.begin(), cur.letters.begin() + s.at);
  const SignedWord c = contractum(s);
  out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
  out.letters.insert(out.letters.end(), cur.letters.begin() + s.at + r.size(), cur.letters.end());
  return out;
}

inline bool matches_at(const SignedWord& cur, const ProofStep& s) {
  const SignedWord r = redex(s);
  if (s.at + r.size() > cur.size()) return false;
  return std::equal(r.letters.begin(), r.letters.end(), cur.letters.begin() + s.at);
}

// neg-mono* contraction* permutation* expansion* pos-mono*
inline bool is_normal(const Proof& p) {
  auto phase = [](Rule r) {
    switch (r) {
      case Rule::neg_mono: return 0;
      case Rule::contraction: return 1;
      case Rule::perm_left:
      case Rule::perm_right: return 2;
      case Rule::expansion: return 3;
      case Rule::pos_mono: return 4;
    }
    return 5;
  };
  int last = 0;
  for (const ProofStep& s : p.steps) {
    if (phase(s.rule) < last) return false;
    last = phase(s.rule);
  }
  return true;
}

enum class ProofStatus { proved, unknown };

struct SearchResult {
  ProofStatus status = ProofStatus::unknown;
  std::optional<Proof> proof;
  bool proved() const { return status == ProofStatus::proved; }
};

// A contiguous stretch u^-1 v w^-1 of a signed word.
struct Pattern {
  std::size_t at = 0, len = 0;
  Word u, v, w;
};

// All stretches of the form (negative)* (positive)* (negative)* with at least
// one negative letter. Purely negative stretches are split at every point.
inline std::vector<Pattern> patterns(const SignedWord& s) {
  std::vector<Pattern> out;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::size_t a = i;
      while (a < j && s.letters[a].negative) ++a;
      std::size_t b = a;
      while (b < j && !s.letters[b].negative) ++b;
      std::size_t c = b;
      while (c < j && s.letters[c].negative) ++c;
      if (c != j || (a == i && c == b)) continue;
      auto neg_word = [&](std::size_t lo, std::size_t hi) {
        Word u;
        for (std::size_t k = hi; k > lo; --k) u.letters.push_back(s.letters[k - 1].elem);
        return u;
      };
      Word v;
      for (std::size_t k = a; k < b; ++k) v.letters.push_back(s.letters[k].elem);
      if (a == b) {
        for (std::size_t split = i; split <= j; ++split)
          out.push_back({i, j - i, neg_word(i, split), Word{}, neg_word(split, j)});
      } else {
        out.push_back({i, j - i, neg_word(i, a), v, neg_word(b, c)});
      }
    }
  return out;
}

class GroupPreimage {
 public:
  explicit GroupPreimage(FinitePomonoid base, int depth_cap = 12)
      : pre_(std::move(base), PreimageVariant{Shape::unital, false}), depth_cap_(depth_cap) {}

  const FinitePomonoid& base() const { return pre_.base(); }
  const FreePreimage& preimage() const { return pre_; }

  // The unital word preorder with the empty word read as [1].
  bool fu_le(const Word& s, const Word& t) const {
    const Word one{base().one()};
    return pre_.le(s.empty() ? one : s, t.empty() ? one : t);
  }

  bool side_condition(const ProofStep& s) const {
    switch (s.rule) {
      case Rule::pos_mono: return !s.v.empty() && fu_le(s.u, s.v);
      case Rule::neg_mono: return !s.u.empty() && !s.v.empty() && fu_le(s.v, s.u);
      case Rule::contraction:
        return !(s.u.empty() && s.w.empty()) && fu_le(s.v, cat(s.u, s.x, s.w));
      case Rule::expansion:
        return !(s.u.empty() && s.w.empty()) && fu_le(cat(s.u, s.x, s.w), s.v);
      case Rule::perm_left:
        return !s.v.empty() && !s.x.empty() && fu_le(cat(s.x, s.u), cat(s.y, s.v));
      case Rule::perm_right:
        return !s.u.empty() && !s.y.empty() && fu_le(cat(s.v, s.y), cat(s.u, s.x));
    }
    return false;
  }

  // Throws on an offset outside the current word; false on any other defect.
  bool check_proof(const Proof& p) const {
    check(p.start);
    SignedWord cur = p.start;
    for (const ProofStep& s : p.steps) {
      if (s.at > cur.size()) throw StructuralError("proof step offset out of range");
      if (!matches_at(cur, s) || !side_condition(s)) return false;
      cur = apply_step(cur, s);
    }
    return cur == p.end;
  }

  // Contractions from alpha, then expansions and positive monotonicity into
  // beta, at most `depth` contractions and expansions in all. Permutations
  // and negative monotonicity are not searched, so a miss is only `unknown`.
  SearchResult prove_bounded(const SignedWord& alpha, const SignedWord& beta, int depth) const {
    if (depth > depth_cap_) throw StructuralError("depth above the configured cap");
    check(alpha);
    check(beta);
    const auto& fwd = forward(alpha);
    const auto& bwd = backward(beta);
    std::optional<Proof> best;
    for (const auto& [a, asteps] : fwd)
      for (const auto& [b, bsteps] : bwd) {
        if (static_cast<int>(asteps.size() + bsteps.size()) > depth) continue;
        auto p = connect(alpha, a, asteps, b, bsteps, beta);
        if (!p) continue;
        if (!best || p->steps.size() < best->steps.size()) best = std::move(p);
      }
    if (!best) return {};
    if (!check_proof(*best)) throw StructuralError("internal: emitted proof does not check");
    return {ProofStatus::proved, std::move(best)};
  }

  // Exact for positive words over integrally closed bases.
  bool decide_positive(const Word& u, const Word& v) const {
    if (!is_integrally_closed(base())) throw NotIntegrallyClosed("base is not integrally closed");
    return fu_le(u, v);
  }

  // Maximal positive words below alpha, by rank reduction.
  std::vector<Word> sigma(const SignedWord& alpha) const {
    check(alpha);
    if (!is_ideally_residuated(base())) throw NotIdeallyResiduated("base is not ideally residuated");
    if (!is_integrally_closed(base())) throw NotIntegrallyClosed("base is not integrally closed");
    auto out = sigma_rec(alpha);
    if (out.empty()) throw NoPositiveBound("no positive word lies below the signed word");
    return out;
  }

  bool is_negative_conucleus(const std::vector<SignedWord>& sample) const {
    const Word one{base().one()};
    for (const SignedWord& a : sample)
      for (const Word& u : sigma(a))
        if (!fu_le(u, one)) return false;
    return true;
  }

  // Maximal x with u x w <= v, |x| <= max(1,|v|); the empty word counts as [1].
  const std::vector<Word>& upper_solutions(const Word& u, const Word& v, const Word& w) const {
    return solutions(u, v, w, true);
  }
  // Minimal x with v <= u x w.
  const std::vector<Word>& lower_solutions(const Word& u, const Word& v, const Word& w) const {
    return solutions(u, v, w, false);
  }

 private:
  using Steps = std::vector<ProofStep>;

  void check(const SignedWord& s) const {
    for (const Letter& l : s.letters)
      if (l.elem < 0 || l.elem >= base().n) throw StructuralError("letter out of range");
  }

  const std::vector<Word>& solutions(const Word& u, const Word& v, const Word& w, bool upper) const {
    auto key = std::make_tuple(upper, u, v, w);
    if (auto it = solution_cache_.find(key); it != solution_cache_.end()) return it->second;
    // Any solution is dominated (upper) or undercut (lower) by one whose
    // letters are products of blocks of v, so |v| letters suffice.
    const int bound = std::max<int>(1, static_cast<int>(v.size()));
    std::vector<Word> sols;
    for (const Word& x : all_words(base().n, 0, bound, false)) {
      const bool ok = upper ? fu_le(cat(u, x, w), v) : fu_le(v, cat(u, x, w));
      if (ok) sols.push_back(x);
    }
    std::vector<Word> ext;
    for (const Word& x : sols) {
      bool dominated = false;
      for (const Word& y : sols) {
        if (&x == &y) continue;
        const bool beyond = upper ? fu_le(x, y) && !fu_le(y, x) : fu_le(y, x) && !fu_le(x, y);
        if (beyond) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      bool dup = false;
      for (const Word& y : ext) dup = dup || (fu_le(x, y) && fu_le(y, x));
      if (!dup) ext.push_back(x);
    }
    return solution_cache_.emplace(key, std::move(ext)).first->second;
  }

  static SignedWord splice(const SignedWord& s, std::size_t at, std::size_t len,
                           const SignedWord& mid) {
    SignedWord out;
    out.letters.assign(s.letters.begin(), s.letters.begin() + at);
    out.letters.insert(out.letters.end(), mid.letters.begin(), mid.letters.end());
    out.letters.insert(out.letters.end(), s.letters.begin() + at + len, s.letters.end());
    return out;
  }

  // Words reachable from alpha by contractions, with the steps taken.
  const std::map<SignedWord, Steps>& forward(const SignedWord& alpha) const {
    if (auto it = forward_cache_.find(alpha); it != forward_cache_.end()) return it->second;
    std::map<SignedWord, Steps> seen{{alpha, {}}};
    std::vector<SignedWord> frontier{alpha};
    while (!frontier.empty()) {
      std::vector<SignedWord> next;
      for (const SignedWord& cur : frontier) {
        const Steps base_steps = seen.at(cur);
        for (const Pattern& pt : patterns(cur))
          for (const Word& x : lower_solutions(pt.u, pt.v, pt.w)) {
            SignedWord to = splice(cur, pt.at, pt.len, positive(x));
            if (seen.count(to)) continue;
            Steps st = base_steps;
            st.push_back({Rule::contraction, pt.at, pt.u, pt.v, pt.w, x, {}});
            seen.emplace(to, std::move(st));
            next.push_back(std::move(to));
          }
      }
      frontier = std::move(next);
    }
    return forward_cache_.emplace(alpha, std::move(seen)).first->second;
  }

  // Words from which beta is reached by expansions; steps in forward order.
  const std::map<SignedWord, Steps>& backward(const SignedWord& beta) const {
    if (auto it = backward_cache_.find(beta); it != backward_cache_.end()) return it->second;
    std::map<SignedWord, Steps> seen{{beta, {}}};
    std::vector<SignedWord> frontier{beta};
    while (!frontier.empty()) {
      std::vector<SignedWord> next;
      for (const SignedWord& cur : frontier) {
        const Steps tail = seen.at(cur);
        for (const Pattern& pt : patterns(cur))
          for (const Word& x : upper_solutions(pt.u, pt.v, pt.w)) {
            SignedWord from = splice(cur, pt.at, pt.len, positive(x));
            if (seen.count(from)) continue;
            Steps st{{Rule::expansion, pt.at, pt.u, pt.v, pt.w, x, {}}};
            st.insert(st.end(), tail.begin(), tail.end());
            seen.emplace(from, std::move(st));
            next.push_back(std::move(from));
          }
      }
      frontier = std::move(next);
    }
    return backward_cache_.emplace(beta, std::move(seen)).first->second;
  }

  // Splits s into |t| consecutive pieces with piece i below [t_i].
  std::optional<std::vector<Word>> block_split(const Word& s, const Word& t) const {
    const int m = static_cast<int>(s.size()), k = static_cast<int>(t.size());
    // ok[i][j]: s[0..i) splits over t[0..j); choice remembers the cut
    std::vector<std::vector<int>> cut(m + 1, std::vector<int>(k + 1, -1));
    cut[0][0] = 0;
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i <= m; ++i)
        for (int h = i; h >= 0; --h) {
          if (cut[h][j - 1] < 0) continue;
          Elem p = base().one();
          for (int q = h; q < i; ++q) p = base().mul(p, s[q]);
          if (base().le(p, t[j - 1])) {
            cut[i][j] = h;
            break;
          }
        }
    if (cut[m][k] < 0) return std::nullopt;
    std::vector<Word> pieces(k);
    for (int j = k, i = m; j >= 1; --j) {
      const int h = cut[i][j];
      pieces[j - 1].letters.assign(s.letters.begin() + h, s.letters.begin() + i);
      i = h;
    }
    return pieces;
  }

  struct Cell {
    Letter target;
    Word piece;  // below [target.elem] for positive cells
  };

  static std::vector<std::pair<std::size_t, std::size_t>> positive_segments(const SignedWord& s) {
    // [lo, hi) of every maximal positive stretch, including empty ones
    // around and between negative letters
    std::vector<std::pair<std::size_t, std::size_t>> segs;
    std::size_t lo = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
      if (i == s.size() || s.letters[i].negative) {
        segs.emplace_back(lo, i);
        lo = i + 1;
      }
    return segs;
  }

  static bool same_skeleton(const SignedWord& a, const SignedWord& b) {
    std::vector<Elem> na, nb;
    for (const Letter& l : a.letters)
      if (l.negative) na.push_back(l.elem);
    for (const Letter& l : b.letters)
      if (l.negative) nb.push_back(l.elem);
    return na == nb;
  }

  // Builds contraction steps, then b's expansions replayed on a, then
  // positive monotonicity letter by letter.
  std::optional<Proof> connect(const SignedWord& alpha, const SignedWord& a, const Steps& asteps,
                               const SignedWord& b, const Steps& bsteps,
                               const SignedWord& beta) const {
    if (!same_skeleton(a, b)) return std::nullopt;
    const auto sa = positive_segments(a), sb = positive_segments(b);
    std::vector<std::vector<Word>> split(sa.size());
    std::vector<bool> to_unit(sa.size(), false);
    for (std::size_t i = 0; i < sa.size(); ++i) {
      Word ps, pt;
      for (std::size_t k = sa[i].first; k < sa[i].second; ++k) ps.letters.push_back(a.letters[k].elem);
      for (std::size_t k = sb[i].first; k < sb[i].second; ++k) pt.letters.push_back(b.letters[k].elem);
      if (pt.empty()) {
        if (ps.empty()) continue;
        if (!fu_le(ps, Word{})) return std::nullopt;
        to_unit[i] = true;
        continue;
      }
      auto pieces = block_split(ps, pt);
      if (!pieces) return std::nullopt;
      split[i] = std::move(*pieces);
    }

    Proof p{alpha, asteps, beta};
    SignedWord cur = a;
    // a segment that must vanish: s -> [1][1]^-1 -> empty
    const Word one{base().one()};
    for (std::size_t i = sa.size(); i-- > 0;) {
      if (!to_unit[i]) continue;
      Word ps;
      for (std::size_t k = sa[i].first; k < sa[i].second; ++k) ps.letters.push_back(a.letters[k].elem);
      ProofStep e{Rule::expansion, sa[i].first, {}, one, one, ps, {}};
      ProofStep c{Rule::contraction, sa[i].first, {}, one, one, {}, {}};
      p.steps.push_back(e);
      cur = apply_step(cur, e);
      p.steps.push_back(c);
      cur = apply_step(cur, c);
    }

    std::vector<Cell> cells;
    for (std::size_t i = 0; i < sb.size(); ++i) {
      for (std::size_t k = sb[i].first; k < sb[i].second; ++k)
        cells.push_back({b.letters[k], split[i][k - sb[i].first]});
      if (sb[i].second < b.size()) cells.push_back({b.letters[sb[i].second], {}});
    }
    auto offset = [&](std::size_t upto) {
      std::size_t off = 0;
      for (std::size_t k = 0; k < upto; ++k) off += cells[k].target.negative ? 1 : cells[k].piece.size();
      return off;
    };

    for (const ProofStep& bs : bsteps) {
      Word xa;
      for (std::size_t k = bs.at; k < bs.at + bs.x.size(); ++k)
        xa.letters.insert(xa.letters.end(), cells[k].piece.letters.begin(), cells[k].piece.letters.end());
      ProofStep e{Rule::expansion, offset(bs.at), bs.u, bs.v, bs.w, xa, {}};
      p.steps.push_back(e);
      cur = apply_step(cur, e);
      std::vector<Cell> fresh;
      for (const Letter& l : contractum(bs).letters)
        fresh.push_back({l, l.negative ? Word{} : Word{l.elem}});
      cells.erase(cells.begin() + bs.at, cells.begin() + bs.at + bs.x.size());
      cells.insert(cells.begin() + bs.at, fresh.begin(), fresh.end());
    }

    for (std::size_t k = cells.size(); k-- > 0;) {
      const Cell& c = cells[k];
      if (c.target.negative || c.piece == Word{c.target.elem}) continue;
      ProofStep m{Rule::pos_mono, offset(k), c.piece, Word{c.target.elem}, {}, {}, {}};
      p.steps.push_back(m);
      cur = apply_step(cur, m);
    }
    if (!(cur == beta)) throw StructuralError("internal: proof assembly drifted");
    return p;
  }

  std::vector<Word> sigma_rec(const SignedWord& alpha) const {
    if (auto it = sigma_cache_.find(alpha); it != sigma_cache_.end()) return it->second;
    std::vector<Word> found;
    if (alpha.is_positive()) {
      found.push_back(pre_.canonical(positive_part(alpha)));
    } else {
      // Nested cancellations mean the leftmost run alone is not enough:
      // every stretch u^-1 v w^-1 is a candidate for the next reduction.
      const auto choices = patterns(alpha);
      for (const Pattern& pt : choices)
        for (const Word& x : upper_solutions(pt.u, pt.v, pt.w)) {
          auto sub = sigma_rec(splice(alpha, pt.at, pt.len, positive(x)));
          found.insert(found.end(), sub.begin(), sub.end());
        }
    }
    std::vector<Word> out;
    for (const Word& x : found) {
      bool dominated = false;
      for (const Word& y : found)
        if (fu_le(x, y) && !fu_le(y, x)) dominated = true;
      if (dominated) continue;
      bool dup = false;
      for (const Word& y : out) dup = dup || (fu_le(x, y) && fu_le(y, x));
      if (!dup) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    sigma_cache_.emplace(alpha, out);
    return out;
  }

  FreePreimage pre_;
  int depth_cap_;
  mutable std::map<std::tuple<bool, Word, Word, Word>, std::vector<Word>> solution_cache_;
  mutable std::map<SignedWord, std::map<SignedWord, Steps>> forward_cache_, backward_cache_;
  mutable std::map<SignedWord, std::vector<Word>> sigma_cache_;
};

}  // namespace nucpre

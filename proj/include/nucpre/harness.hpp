#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "group.hpp"
#include "idl.hpp"
#include "io.hpp"
#include "laws.hpp"
#include "nucleus.hpp"
#include "regression.hpp"
#include "term.hpp"
#include "words.hpp"

namespace nucpre {

struct SuiteConfig {
  int n_max = 3;
  int L = 4;
  int depth = 6;
  int n_square = 3;
  std::uint64_t seed = 1;
  std::string cache_dir;  // empty: keep catalogs in memory only
};

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped-precondition";
  }
  return "?";
}

struct VerificationReport {
  std::string id;
  Status status = Status::pass;
  std::string witness;  // set on fail, CLI literal syntax
  long long millis = 0;
  std::string note;     // members checked, bounds used
};

inline std::string variant_name(PreimageVariant v) {
  std::string s = v.shape == Shape::monoid ? "mon" : v.shape == Shape::unital ? "umon" : "sgrp";
  return v.commutative ? s + " --commutative" : s;
}

// Every word variant that makes sense over A.
inline std::vector<PreimageVariant> variants_for(const FinitePomonoid& A, bool monoid = true,
                                                 bool unital = true, bool semigroup = true) {
  std::vector<PreimageVariant> out;
  for (bool comm : {false, true}) {
    if (comm && !A.is_commutative()) continue;
    if (monoid && A.unit) out.push_back({Shape::monoid, comm});
    if (unital && A.unit) out.push_back({Shape::unital, comm});
    if (semigroup) out.push_back({Shape::semigroup, comm});
  }
  return out;
}

// ---- catalog cache -------------------------------------------------------------

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << v;
  return out.str();
}

// Splits a multi-algebra text at header lines.
inline std::vector<FinitePomonoid> parse_algebra_list(const std::string& text) {
  std::vector<FinitePomonoid> out;
  std::istringstream in(text);
  std::string chunk;
  auto flush = [&] {
    if (chunk.find_first_not_of(" \n\t") != std::string::npos)
      out.push_back(parse_algebra(chunk).algebra);
    chunk.clear();
  };
  for (std::string line; std::getline(in, line);) {
    const auto t = tokens(line);
    if (!t.empty() && (t[0] == "pomonoid" || t[0] == "slmonoid" || t[0] == "posemigroup")) flush();
    if (!t.empty() && t[0][0] == '#') continue;
    chunk += line + "\n";
  }
  flush();
  return out;
}

}  // namespace detail

// The catalog for (n_max, kind, commutative). With a cache directory the
// serialized catalog is stored under a name derived from the request and
// carries a digest of its body; a digest mismatch regenerates it.
inline std::vector<FinitePomonoid> load_catalog(int n_max, Structure kind, bool commutative,
                                                const std::string& cache_dir = "") {
  if (cache_dir.empty()) return enumerate_pomonoids(n_max, kind, commutative);
  namespace fs = std::filesystem;
  const std::string key = "catalog v1 n_max=" + std::to_string(n_max) +
                          " kind=" + std::to_string(static_cast<int>(kind)) +
                          " commutative=" + std::to_string(commutative);
  const fs::path path = fs::path(cache_dir) / ("catalog-" + detail::hex(detail::fnv1a(key)) + ".alg");
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    std::ostringstream body;
    body << in.rdbuf();
    if (first == "# digest " + detail::hex(detail::fnv1a(body.str()))) {
      return detail::parse_algebra_list(body.str());
    }
  }
  auto cat = enumerate_pomonoids(n_max, kind, commutative);
  std::string body;
  for (const auto& A : cat) body += serialize(A);
  fs::create_directories(cache_dir);
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << "# digest " << detail::hex(detail::fnv1a(body)) << "\n" << body;
  return cat;
}

// ---- triangle identities ---------------------------------------------------------

// Unit a -> [a] and counit [a1,...,an] -> a1*...*an for the word adjunction,
// and unit a -> down(a), counit down{x1..xn} -> x1 v ... v xn when A has
// joins. Words up to length L; every nucleus of A is used for the image side.
inline std::optional<std::string> check_triangle_identities(const FinitePomonoid& A, int L) {
  if (!A.unit) throw StructuralError("triangle identities are checked on monoids");
  const FreePreimage F(A, {Shape::unital, false});
  // counit of the free algebra after the preimage of the unit
  for (const Word& w : F.words(L)) {
    Word back;
    for (Elem a : w.letters) back = F.compose(back, F.embed(a));
    if (!F.equiv(back, w)) return "word counit " + to_literal(w);
  }
  for (const Nucleus& g : enumerate_nuclei(A)) {
    const FinitePomonoid B = nuclear_image(A, g);
    const auto carrier = fixed_points(g.map);
    const FreePreimage FB(B, {Shape::unital, false});
    auto counit = [&](const Word& u) {
      Elem p = A.one();
      for (Elem b : u.letters) p = A.mul(p, carrier[b]);
      return p;
    };
    for (Elem b = 0; b < B.n; ++b)
      if (counit(FB.embed(b)) != carrier[b])
        return A.name + "/" + g.name + " unit then counit at " + std::to_string(carrier[b]);
    const auto ws = FB.words(L);
    for (const Word& u : ws) {
      // the counit carries [gamma] to the nucleus of A
      if (carrier[FB.gamma(u)] != g(counit(u)))
        return A.name + "/" + g.name + " counit and nucleus at " + to_literal(u);
      for (const Word& v : ws) {
        if (FB.le(u, v) && !A.le(counit(u), counit(v)))
          return A.name + "/" + g.name + " counit not monotone " + to_literal(u) + " " + to_literal(v);
        if (counit(FB.compose(u, v)) != A.mul(counit(u), counit(v)))
          return A.name + "/" + g.name + " counit not multiplicative " + to_literal(u) + " " +
                 to_literal(v);
      }
    }
  }
  if (!A.has_join()) return std::nullopt;
  IdAlgebra<ElementCarrier> id{ElementCarrier(A)};
  const auto xs = all_antichains(id.carrier());
  auto counit = [&](const Antichain<Elem>& x) {
    Elem j = x.gens.front();
    for (Elem e : x.gens) j = A.join(j, e);
    return j;
  };
  for (const auto& x : xs) {
    // Id(unit) then the counit of Id: the join in Id of the down(x_i)
    Antichain<Elem> back = id.down(x.gens.front());
    for (Elem e : x.gens) back = id.join(back, id.down(e));
    if (!id.equal(back, x)) return A.name + " Id counit " + to_literal(x);
  }
  for (Elem a = 0; a < A.n; ++a)
    if (counit(id.down(a)) != a) return A.name + " Id unit then counit at " + std::to_string(a);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      if (counit(id.mult(x, y)) != A.mul(counit(x), counit(y)))
        return A.name + " Id counit not multiplicative " + to_literal(x) + " " + to_literal(y);
      if (counit(id.join(x, y)) != A.join(counit(x), counit(y)))
        return A.name + " Id counit misses joins " + to_literal(x) + " " + to_literal(y);
    }
  for (const Nucleus& g : enumerate_nuclei(A))
    for (const auto& x : xs)
      if (counit(gamma_id(A, g, x)) != g(counit(x)))
        return A.name + "/" + g.name + " Id counit and nucleus at " + to_literal(x);
  return std::nullopt;
}

// ---- proof-search reference for sigma ----------------------------------------------

inline std::vector<SignedWord> signed_words(int alphabet, int max_len, int max_rank) {
  std::vector<SignedWord> out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> digit(len, 0);
    while (true) {
      SignedWord s;
      for (int d : digit) s.letters.push_back({d / 2, d % 2 == 1});
      if (s.rank() <= max_rank) out.push_back(std::move(s));
      int i = len - 1;
      while (i >= 0 && ++digit[i] == 2 * alphabet) digit[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

// Maximal positive w, 1 <= |w| <= max(1, |positive part|), with w below
// alpha by a proof found at the given depth.
inline std::vector<Word> sigma_by_search(const GroupPreimage& G, const SignedWord& alpha, int depth) {
  const int bound = std::max<int>(1, static_cast<int>(positive_part(alpha).size()));
  std::vector<Word> ok;
  for (const Word& w : all_words(G.base().n, 1, bound, false))
    if (G.prove_bounded(positive(w), alpha, depth).proved()) ok.push_back(w);
  std::vector<Word> out;
  for (const Word& x : ok) {
    bool dominated = false;
    for (const Word& y : ok) dominated = dominated || (G.fu_le(x, y) && !G.fu_le(y, x));
    if (!dominated) out.push_back(x);
  }
  return out;
}

inline bool same_downset(const GroupPreimage& G, const std::vector<Word>& xs,
                         const std::vector<Word>& ys) {
  auto covered = [&](const std::vector<Word>& a, const std::vector<Word>& b) {
    for (const Word& x : a) {
      bool found = false;
      for (const Word& y : b) found = found || G.fu_le(x, y);
      if (!found) return false;
    }
    return true;
  };
  return covered(xs, ys) && covered(ys, xs);
}

inline std::string words_literal(const std::vector<Word>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? "," : "") + to_literal(ws[i]);
  return out + "}";
}

// ---- suite ----------------------------------------------------------------------------

struct Catalogs {
  std::vector<FinitePomonoid> pomonoids;
  std::vector<FinitePomonoid> sl_monoids;
};

inline Catalogs load_catalogs(const SuiteConfig& cfg) {
  return {load_catalog(cfg.n_max, Structure::pomonoid, false, cfg.cache_dir),
          load_catalog(cfg.n_max, Structure::sl_monoid, false, cfg.cache_dir)};
}

namespace suite {

using Witness = std::optional<std::string>;

inline Witness preorder_and_nucleus_laws(const SuiteConfig& cfg, const Catalogs& cat) {
  std::mt19937_64 rng(cfg.seed);
  for (const auto& A : cat.pomonoids)
    for (PreimageVariant var : variants_for(A)) {
      const FreePreimage F(A, var);
      const auto ws = F.words(cfg.L);
      const std::size_t k = ws.size();
      std::vector<char> le(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) le[i * k + j] = F.le(ws[i], ws[j]);
      const std::string where = A.name + " " + variant_name(var) + " ";
      for (std::size_t i = 0; i < k; ++i)
        if (!le[i * k + i]) return where + "reflexivity " + to_literal(ws[i]);
      for (int t = 0; t < 10000; ++t) {
        const std::size_t i = rng() % k, j = rng() % k, l = rng() % k;
        if (le[i * k + j] && le[j * k + l] && !le[i * k + l])
          return where + "transitivity " + to_literal(ws[i]) + " " + to_literal(ws[j]) + " " +
                 to_literal(ws[l]);
      }
      for (std::size_t i = 0; i < k; ++i) {
        const Word& u = ws[i];
        const Elem gu = F.gamma(u);
        if (!F.le(u, Word{gu})) return where + "increasing " + to_literal(u);
        if (F.gamma(Word{gu}) != gu) return where + "idempotent " + to_literal(u);
        for (std::size_t j = 0; j < k; ++j) {
          const Word& v = ws[j];
          if (!F.le(F.compose(Word{gu}, Word{F.gamma(v)}), Word{F.gamma(F.compose(u, v))}))
            return where + "multiplicative " + to_literal(u) + " " + to_literal(v);
          if (!le[i * k + j]) continue;
          if (!A.le(gu, F.gamma(v))) return where + "nucleus monotone " + to_literal(u) + " " + to_literal(v);
          for (Elem a = 0; a < A.n; ++a) {
            const Word s{a};
            if (!F.le(F.compose(s, u), F.compose(s, v)) || !F.le(F.compose(u, s), F.compose(v, s)))
              return where + "isotone " + to_literal(u) + " " + to_literal(v) + " " + to_literal(s);
          }
        }
      }
    }
  return std::nullopt;
}

inline Witness image_recovery(const SuiteConfig&, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    const FreePreimage F(A, {Shape::unital, false});
    FinitePomonoid B;
    B.name = A.name + "-singletons";
    B.n = A.n;
    B.order.assign(A.n * A.n, 0);
    B.product.assign(A.n * A.n, 0);
    B.unit = F.gamma(Word{});
    for (Elem a = 0; a < A.n; ++a)
      for (Elem b = 0; b < A.n; ++b) {
        B.order[a * A.n + b] = F.le(Word{a}, Word{b});
        B.product[a * A.n + b] = F.gamma(Word{a, b});
      }
    if (!are_isomorphic(B, A, kind_of(A))) return A.name;
  }
  return std::nullopt;
}

inline Witness cancellativity_equivalence(const SuiteConfig& cfg, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids)
    for (bool comm : {false, true}) {
      if (comm && !A.is_commutative()) continue;
      const FreePreimage F(A, {Shape::unital, comm});
      const auto w = check_left_cancellativity(F, cfg.L);
      if (w.has_value() == is_integrally_closed(A)) {
        std::string s = A.name + " " + variant_name(F.variant()) + " integrally-closed=" +
                        (is_integrally_closed(A) ? "true" : "false");
        if (w)
          s += " witness a=" + std::to_string(w->a) + " " + to_literal(w->u) + " " + to_literal(w->v);
        return s;
      }
    }
  return std::nullopt;
}

inline Witness limited_cancellativity(const SuiteConfig& cfg, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids)
    for (PreimageVariant var : variants_for(A)) {
      const FreePreimage F(A, var);
      if (auto w = check_limited_cancellativity(F, cfg.L))
        return A.name + " " + variant_name(var) + " " + to_literal(w->u) + " " + to_literal(w->w);
    }
  return std::nullopt;
}

inline Witness simple_preservation(const SuiteConfig&, const Catalogs& cat) {
  for (bool join : {false, true}) {
    const auto stream = generate_simple(2, 3, {join});
    const auto& members = join ? cat.sl_monoids : cat.pomonoids;
    for (const auto& A : members)
      for (const Nucleus& g : enumerate_nuclei(A)) {
        const FinitePomonoid B = nuclear_image(A, g);
        const Nucleus id = identity_nucleus(B);
        for (const auto& phi : stream) {
          if (eval_quasi(phi, A, &g)) continue;
          if (auto env = eval_quasi(phi, B, &id))
            return A.name + "/" + g.name + " \"" + to_string(phi) + "\" image assignment " +
                   to_literal(*env);
        }
      }
  }
  return std::nullopt;
}

inline Witness square_bridge(const SuiteConfig& cfg, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    if (!A.is_commutative()) continue;
    const FreePreimage F(A, {Shape::unital, true});
    if (auto d = check_power_bridge(F, cfg.n_square, 3))
      return A.name + " n=" + std::to_string(d->n) + " k=" + std::to_string(d->vars) +
             " square=" + (d->square_holds ? "true" : "false") +
             " words=" + (d->words_hold ? "true" : "false") +
             (d->w ? " w=" + to_literal(*d->w) + " a=" + std::to_string(*d->a) : "");
  }
  return std::nullopt;
}

inline bool genuine(const FinitePomonoid& A, const IdCancelWitness& w) {
  IdAlgebra<ElementCarrier> id{ElementCarrier(A)};
  if (id.le(w.b, w.c)) return false;
  return w.side == Side::left ? id.le(id.mult(w.a, w.b), id.mult(w.a, w.c))
                              : id.le(id.mult(w.b, w.a), id.mult(w.c, w.a));
}

inline std::string id_witness(const IdCancelWitness& w) {
  return std::string(w.side == Side::left ? "left" : "right") + " a=" + to_literal(w.a) +
         " b=" + to_literal(w.b) + " c=" + to_literal(w.c);
}

inline Witness id_triviality(const SuiteConfig&, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    if (!A.is_commutative()) continue;
    const auto w = id_cancellativity_witness(A);
    if (A.n == 1 && w) return A.name + " trivial but " + id_witness(*w);
    if (A.n > 1 && !w) return A.name + " Id is cancellative";
    if (w && !genuine(A, *w)) return A.name + " bogus " + id_witness(*w);
  }
  return std::nullopt;
}

inline Witness id_cancel_criterion(const SuiteConfig&, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    const int bound = static_cast<int>(all_antichains(ElementCarrier(A)).size());
    const auto rep = check_id_cancel_criterion(A, bound);
    if (rep.id_cancellative != rep.sentences_hold)
      return A.name + " direct=" + (rep.id_cancellative ? "true" : "false") +
             " sentences=" + (rep.sentences_hold ? "true" : "false");
    if (rep.constructed && !genuine(A, *rep.constructed))
      return A.name + " constructed witness fails " + id_witness(*rep.constructed);
  }
  return std::nullopt;
}

inline Witness integral_fragment_cancellativity(const SuiteConfig& cfg, const Catalogs& cat) {
  for (const auto& A : cat.sl_monoids) {
    if (!is_integral(A)) continue;
    for (bool comm : {false, true}) {
      if (comm && !A.is_commutative()) continue;
      const FreePreimage F(A, {Shape::unital, comm});
      if (auto w = check_fragment_cancellativity(F, cfg.L, 2))
        return A.name + " " + variant_name(F.variant()) + " x=" + to_literal(w->x) +
               " y=" + to_literal(w->y) + " z=" + to_literal(w->z);
    }
  }
  return std::nullopt;
}

inline Witness conservativity(const SuiteConfig& cfg, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    if (!is_integrally_closed(A)) continue;
    const GroupPreimage G(A);
    const auto ws = all_words(A.n, 1, 3, false);
    for (const Word& u : ws)
      for (const Word& v : ws) {
        const bool proved = G.prove_bounded(positive(u), positive(v), cfg.depth).proved();
        if (proved != G.decide_positive(u, v))
          return A.name + " " + to_literal(u) + " " + to_literal(v) +
                 (proved ? " proved but rejected by word_le" : " word_le holds, no proof found");
      }
  }
  return std::nullopt;
}

inline Witness sigma_oracle(const SuiteConfig& cfg, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    if (!is_ideally_residuated(A) || !is_integrally_closed(A)) continue;
    const GroupPreimage G(A);
    for (const SignedWord& alpha : signed_words(A.n, 4, 2)) {
      const auto fast = G.sigma(alpha);
      const auto slow = sigma_by_search(G, alpha, cfg.depth);
      if (!same_downset(G, fast, slow))
        return A.name + " " + to_literal(alpha) + " sigma=" + words_literal(fast) +
               " search=" + words_literal(slow);
    }
  }
  return std::nullopt;
}

inline Witness residual_and_meets(const SuiteConfig& cfg, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    if (!is_residuated(A)) continue;
    for (PreimageVariant var : variants_for(A, true, true, false)) {
      const FreePreimage F(A, var);
      const auto ws = F.words(cfg.L);
      for (const Word& u : ws)
        for (Elem a = 0; a < A.n; ++a)
          for (Side side : {Side::left, Side::right}) {
            const Word r = *F.residual_by_singleton(u, a, side);
            for (const Word& v : ws) {
              const Word uv = side == Side::left ? F.compose(u, v) : F.compose(v, u);
              if (F.le(uv, Word{a}) != F.le(v, r))
                return A.name + " " + variant_name(var) + " residual u=" + to_literal(u) +
                       " a=" + std::to_string(a) + " v=" + to_literal(v) +
                       (side == Side::left ? " left" : " right");
            }
          }
    }
  }
  for (const auto& A : cat.pomonoids) {
    if (!is_integral(A)) continue;
    const FreePreimage F(A, {Shape::unital, false});
    if (auto w = check_meet_distribution(F, cfg.L))
      return A.name + " meet distribution " + (w->side == Side::left ? "left" : "right") +
             " x=" + to_literal(w->x) + " y=" + to_literal(w->y) + " z=" + to_literal(w->z);
  }
  return std::nullopt;
}

inline Witness distributivity_and_residuation(const SuiteConfig&, const Catalogs& cat) {
  for (const auto& A : cat.pomonoids) {
    IdAlgebra<ElementCarrier> id{ElementCarrier(A)};
    const auto xs = all_antichains(id.carrier());
    if (auto w = check_distributive_semilattice(id, xs))
      return A.name + " a=" + to_literal(w->a) + " b=" + to_literal(w->b) + " c=" + to_literal(w->c);
  }
  for (const auto& A : cat.sl_monoids) {
    if (!is_ideally_residuated(A)) continue;
    for (Elem a = 0; a < A.n; ++a)
      for (Elem c = 0; c < A.n; ++c)
        for (Side side : {Side::left, Side::right}) {
          const auto gens = ideal_residuals(A, a, c, side);
          Elem j = gens.front();
          for (Elem e : gens) j = A.join(j, e);
          const auto r = A.residual(a, c, side);
          if (!r || *r != j)
            return A.name + " ideally residuated, residual of " + std::to_string(a) + " " +
                   std::to_string(c) + (side == Side::left ? " left" : " right");
        }
  }
  return std::nullopt;
}

inline Witness triangle_identities(const SuiteConfig&, const Catalogs& cat) {
  for (const auto* members : {&cat.pomonoids, &cat.sl_monoids})
    for (const auto& A : *members)
      if (auto w = check_triangle_identities(A, 3)) return *w;
  return std::nullopt;
}

inline Witness regression_constants(const SuiteConfig& cfg, const Catalogs&) {
  const int top = std::min(cfg.n_max, 4);
  for (int n = 1; n <= top; ++n) {
    const auto check = [&](Structure kind, bool comm, const auto& frozen, const char* what) -> Witness {
      const int got = static_cast<int>(load_catalog(n, kind, comm, cfg.cache_dir).size());
      if (got != frozen[n - 1])
        return std::string(what) + " n_max=" + std::to_string(n) + " got " + std::to_string(got) +
               " frozen " + std::to_string(frozen[n - 1]);
      return std::nullopt;
    };
    if (auto w = check(Structure::pomonoid, false, regression::pomonoids, "pomonoids")) return w;
    if (auto w = check(Structure::sl_monoid, false, regression::sl_monoids, "sl-monoids")) return w;
    if (auto w = check(Structure::pomonoid, true, regression::commutative_pomonoids, "commutative"))
      return w;
    if (n <= 3)
      if (auto w = check(Structure::posemigroup, false, regression::posemigroups, "posemigroups"))
        return w;
  }
  const auto cat3 = load_catalog(std::min(top, 3), Structure::pomonoid, false, cfg.cache_dir);
  for (std::size_t i = 0; i < cat3.size(); ++i) {
    const int got = static_cast<int>(enumerate_nuclei(cat3[i]).size());
    if (got != regression::nuclei_per_pomonoid[i])
      return cat3[i].name + " nuclei " + std::to_string(got) + " frozen " +
             std::to_string(regression::nuclei_per_pomonoid[i]);
  }
  return std::nullopt;
}

struct Row {
  const char* id;
  Witness (*run)(const SuiteConfig&, const Catalogs&);
};

inline const std::vector<Row>& rows() {
  static const std::vector<Row> table{
      {"preorder-and-nucleus-laws", preorder_and_nucleus_laws},
      {"image-recovery", image_recovery},
      {"cancellativity-iff-integrally-closed", cancellativity_equivalence},
      {"limited-cancellativity", limited_cancellativity},
      {"simple-quasi-inequality-preservation", simple_preservation},
      {"square-condition-bridge", square_bridge},
      {"id-cancellative-only-if-trivial", id_triviality},
      {"id-cancellativity-cycle-criterion", id_cancel_criterion},
      {"integral-sl-fragment-cancellativity", integral_fragment_cancellativity},
      {"positive-conservativity", conservativity},
      {"sigma-matches-proof-search", sigma_oracle},
      {"residual-formula-and-meet-distribution", residual_and_meets},
      {"id-distributive-and-ideal-residuation", distributivity_and_residuation},
      {"triangle-identities", triangle_identities},
      {"regression-constants", regression_constants},
  };
  return table;
}

}  // namespace suite

inline VerificationReport run_row(const suite::Row& row, const SuiteConfig& cfg, const Catalogs& cat) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep{row.id, Status::pass, "", 0, ""};
  if (auto w = row.run(cfg, cat)) {
    rep.status = Status::fail;
    rep.witness = *w;
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

// Rows run in fixed order; a row that throws is reported as a failure with
// the exception text.
inline std::vector<VerificationReport> run_suite(const SuiteConfig& cfg,
                                                 const std::function<void(const VerificationReport&)>& on_row = {}) {
  if (cfg.n_max < 1 || cfg.n_max > 4) throw StructuralError("n_max must be within 1..4");
  const Catalogs cat = load_catalogs(cfg);
  std::vector<VerificationReport> out;
  for (const auto& row : suite::rows()) {
    VerificationReport rep;
    try {
      rep = run_row(row, cfg, cat);
    } catch (const std::ios_base::failure&) {
      throw;
    } catch (const std::exception& e) {
      rep = {row.id, Status::fail, std::string("exception: ") + e.what(), 0, ""};
    }
    if (on_row) on_row(rep);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace nucpre

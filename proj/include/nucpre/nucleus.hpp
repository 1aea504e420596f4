#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace nucpre {

struct Nucleus {
  std::string name;
  std::vector<Elem> map;
  Elem operator()(Elem a) const { return map[a]; }
  friend bool operator==(const Nucleus& x, const Nucleus& y) { return x.map == y.map; }
};

struct Conucleus {
  std::string name;
  std::vector<Elem> map;
  Elem operator()(Elem a) const { return map[a]; }
  friend bool operator==(const Conucleus& x, const Conucleus& y) { return x.map == y.map; }
};

inline Nucleus identity_nucleus(const FinitePomonoid& A) {
  Nucleus g{"id", std::vector<Elem>(A.n)};
  for (Elem a = 0; a < A.n; ++a) g.map[a] = a;
  return g;
}

namespace detail {

inline void check_total(const FinitePomonoid& A, const std::vector<Elem>& map) {
  if (static_cast<int>(map.size()) != A.n) throw StructuralError("map is not total");
  for (Elem b : map)
    if (b < 0 || b >= A.n) throw StructuralError("map value out of range");
}

// Shared by nuclei and conuclei; `up` selects a <= map(a) versus map(a) <= a.
inline ValidationReport validate_operator(const FinitePomonoid& A, const std::vector<Elem>& m,
                                          bool up) {
  check_total(A, m);
  ValidationReport rep;
  auto report = [&](const char* axiom, std::vector<Elem> w) {
    if (!rep.has(axiom)) rep.violations.push_back({axiom, std::move(w)});
  };
  for (Elem a = 0; a < A.n; ++a) {
    if (up ? !A.le(a, m[a]) : !A.le(m[a], a)) report(up ? "increasing" : "decreasing", {a});
    if (m[m[a]] != m[a]) report("idempotent", {a});
    for (Elem b = 0; b < A.n; ++b) {
      if (A.le(a, b) && !A.le(m[a], m[b])) report("monotone", {a, b});
      if (!A.le(A.mul(m[a], m[b]), m[A.mul(a, b)])) report("multiplicative", {a, b});
    }
  }
  return rep;
}

}  // namespace detail

inline ValidationReport validate_nucleus(const FinitePomonoid& A, const Nucleus& g) {
  return detail::validate_operator(A, g.map, true);
}

// The unit law is only demanded when the algebra has a unit.
inline ValidationReport validate_conucleus(const FinitePomonoid& A, const Conucleus& s) {
  auto rep = detail::validate_operator(A, s.map, false);
  if (A.unit && s(*A.unit) != *A.unit) rep.violations.push_back({"unital", {*A.unit}});
  return rep;
}

inline bool is_unital(const FinitePomonoid& A, const Nucleus& g) { return g(A.one()) == A.one(); }

// Closure systems: subsets C such that every element has a least element of
// C above it. Each yields exactly one closure operator; the multiplicative
// ones are the nuclei. Emitted in increasing subset-mask order.
inline std::vector<Nucleus> enumerate_nuclei(const FinitePomonoid& A) {
  if (A.n > 6) throw StructuralError("nucleus enumeration is capped at 6 elements");
  std::vector<Nucleus> out;
  const std::uint32_t total = 1u << A.n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<Elem> m(A.n, -1);
    bool ok = true;
    for (Elem a = 0; a < A.n && ok; ++a) {
      std::optional<Elem> least;
      for (Elem c = 0; c < A.n; ++c) {
        if (!(mask & (1u << c)) || !A.le(a, c)) continue;
        if (!least || A.le(c, *least)) least = c;
      }
      if (!least) {
        ok = false;
        break;
      }
      for (Elem c = 0; c < A.n && ok; ++c)
        if ((mask & (1u << c)) && A.le(a, c) && !A.le(*least, c)) ok = false;
      if (ok) m[a] = *least;
    }
    if (!ok) continue;
    bool mult = true;
    for (Elem a = 0; a < A.n && mult; ++a)
      for (Elem b = 0; b < A.n && mult; ++b)
        mult = A.le(A.mul(m[a], m[b]), m[A.mul(a, b)]);
    if (!mult) continue;
    out.push_back({"g" + std::to_string(out.size()), std::move(m)});
  }
  return out;
}

// Dual construction: every element has a greatest element of C below it.
inline std::vector<Conucleus> enumerate_conuclei(const FinitePomonoid& A) {
  if (A.n > 6) throw StructuralError("conucleus enumeration is capped at 6 elements");
  std::vector<Conucleus> out;
  const std::uint32_t total = 1u << A.n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<Elem> m(A.n, -1);
    bool ok = true;
    for (Elem a = 0; a < A.n && ok; ++a) {
      std::optional<Elem> greatest;
      for (Elem c = 0; c < A.n; ++c) {
        if (!(mask & (1u << c)) || !A.le(c, a)) continue;
        if (!greatest || A.le(*greatest, c)) greatest = c;
      }
      if (!greatest) {
        ok = false;
        break;
      }
      for (Elem c = 0; c < A.n && ok; ++c)
        if ((mask & (1u << c)) && A.le(c, a) && !A.le(c, *greatest)) ok = false;
      if (ok) m[a] = *greatest;
    }
    if (!ok) continue;
    Conucleus s{"s" + std::to_string(out.size()), std::move(m)};
    if (!validate_conucleus(A, s).ok()) continue;
    out.push_back(std::move(s));
  }
  return out;
}

// Fixed points of a map, ascending; these are the image carrier ids.
inline std::vector<Elem> fixed_points(const std::vector<Elem>& m) {
  std::vector<Elem> out;
  for (Elem a = 0; a < static_cast<Elem>(m.size()); ++a)
    if (m[a] == a) out.push_back(a);
  return out;
}

// Closed elements with a*b := g(a*b), unit g(1), join g(a v b). Element k
// of the image is fixed_points(g.map)[k] of the base.
inline FinitePomonoid nuclear_image(const FinitePomonoid& A, const Nucleus& g) {
  const auto carrier = fixed_points(g.map);
  const int k = static_cast<int>(carrier.size());
  std::vector<Elem> index(A.n, -1);
  for (int i = 0; i < k; ++i) index[carrier[i]] = i;
  FinitePomonoid B;
  B.name = A.name + "/" + g.name;
  B.n = k;
  B.order.assign(k * k, 0);
  B.product.assign(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      B.order[i * k + j] = A.le(carrier[i], carrier[j]);
      B.product[i * k + j] = index[g(A.mul(carrier[i], carrier[j]))];
    }
  if (A.unit) B.unit = index[g(*A.unit)];
  if (A.has_join()) {
    B.joins.assign(k * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) B.joins[i * k + j] = index[g(A.join(carrier[i], carrier[j]))];
  }
  return B;
}

// Open elements with the inherited operations.
inline FinitePomonoid conuclear_image(const FinitePomonoid& A, const Conucleus& s) {
  const auto carrier = fixed_points(s.map);
  const int k = static_cast<int>(carrier.size());
  std::vector<Elem> index(A.n, -1);
  for (int i = 0; i < k; ++i) index[carrier[i]] = i;
  FinitePomonoid B;
  B.name = A.name + "/" + s.name;
  B.n = k;
  B.order.assign(k * k, 0);
  B.product.assign(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      B.order[i * k + j] = A.le(carrier[i], carrier[j]);
      B.product[i * k + j] = index[A.mul(carrier[i], carrier[j])];
    }
  if (A.unit) B.unit = index[*A.unit];
  if (A.has_join()) {
    B.joins.assign(k * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) B.joins[i * k + j] = index[A.join(carrier[i], carrier[j])];
  }
  return B;
}

// sigma(a meet b) inside the open elements, when A has that meet.
inline std::optional<Elem> conuclear_meet(const FinitePomonoid& A, const Conucleus& s, Elem a,
                                          Elem b) {
  auto m = A.glb(a, b);
  if (!m) return std::nullopt;
  return s(*m);
}

}  // namespace nucpre

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <nucpre/io.hpp>

namespace fixture {

using nucpre::Elem;
using nucpre::FinitePomonoid;

// n elements, strict order pairs (closed reflexively and transitively), row-major table.
inline FinitePomonoid make(int n, std::optional<Elem> unit, std::vector<std::pair<Elem, Elem>> below,
                           std::vector<Elem> table, const std::string& name = "A") {
  FinitePomonoid A;
  A.name = name;
  A.n = n;
  A.unit = unit;
  A.product = std::move(table);
  A.order.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) A.order[a * n + a] = 1;
  for (auto [a, b] : below) A.order[a * n + b] = 1;
  for (Elem k = 0; k < n; ++k)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (A.order[a * n + k] && A.order[k * n + b]) A.order[a * n + b] = 1;
  return A;
}

inline FinitePomonoid with_joins(FinitePomonoid A) {
  A.joins.assign(A.n * A.n, 0);
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b) A.joins[a * A.n + b] = *A.lub(a, b);
  return A;
}

// 0 < 1, unit 1, product = min
inline FinitePomonoid two_chain() { return make(2, 1, {{0, 1}}, {0, 0, 0, 1}, "two_chain"); }

// 0 < 1 < 2, unit 1, product = min: 2 sits above the unit
inline FinitePomonoid three_chain_min() {
  return make(3, 1, {{0, 1}, {1, 2}}, {0, 0, 0, 0, 1, 1, 0, 1, 2}, "three_chain_min");
}

// 2 < 1 < 0 = unit, 1 idempotent, 2 absorbing
inline FinitePomonoid chain3() {
  return with_joins(make(3, 0, {{2, 1}, {1, 0}}, {0, 1, 2, 1, 1, 2, 2, 2, 2}, "chain3"));
}

inline FinitePomonoid trivial() { return make(1, 0, {}, {0}, "trivial"); }

// Z2, discrete order
inline FinitePomonoid z2() { return make(2, 0, {}, {0, 1, 1, 0}, "z2"); }

// {1, a} incomparable with a.a = a
inline FinitePomonoid idempotent_pair() { return make(2, 0, {}, {0, 1, 1, 1}, "idempotent_pair"); }

// 0 < 1 with unit 0 at the bottom and 1.1 = 1 (product = max)
inline FinitePomonoid bottom_unit() { return make(2, 0, {{0, 1}}, {0, 1, 1, 1}, "bottom_unit"); }

// 2-element antichain with product = left projection and no unit
inline FinitePomonoid left_zero() { return make(2, std::nullopt, {}, {0, 0, 1, 1}, "left_zero"); }

}  // namespace fixture

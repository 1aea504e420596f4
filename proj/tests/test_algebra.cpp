#include <catch_amalgamated.hpp>

#include <nucpre/algebra.hpp>
#include <nucpre/regression.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nucpre;

namespace {
const AlgebraKind kPomonoid{Structure::pomonoid, false};
}

TEST_CASE("validate reports axioms with witnesses") {
  CHECK(validate(fixture::two_chain(), kPomonoid).ok());

  auto A = fixture::two_chain();
  A.product[0] = 1;  // 0.0 = 1
  const auto rep = validate(A, kPomonoid);
  CHECK_FALSE(rep.ok());
  CHECK((rep.has("isotone") || rep.has("associative")));

  auto B = fixture::chain3();
  B.order[1 * 3 + 1] = 0;
  const auto rb = validate(B, {Structure::sl_monoid, false});
  REQUIRE(rb.has("reflexive"));
  for (const auto& v : rb.violations)
    if (v.axiom == "reflexive") CHECK(v.witness == std::vector<Elem>{1});

  auto C = fixture::two_chain();
  C.product.pop_back();
  CHECK_THROWS_AS(validate(C, kPomonoid), StructuralError);

  auto D = fixture::two_chain();
  D.unit.reset();
  CHECK_THROWS_AS(validate(D, kPomonoid), StructuralError);
}

TEST_CASE("validate checks sl-monoid join tables") {
  auto A = fixture::chain3();
  CHECK(validate(A, {Structure::sl_monoid, true}).ok());
  A.joins[1 * 3 + 2] = 2;  // 1 join 2 should be 1
  CHECK_FALSE(validate(A, {Structure::sl_monoid, false}).ok());
}

TEST_CASE("is_integral") {
  CHECK(is_integral(fixture::two_chain()));
  CHECK_FALSE(is_integral(fixture::three_chain_min()));
  CHECK(is_integral(fixture::trivial()));
}

TEST_CASE("is_integrally_closed") {
  CHECK(is_integrally_closed(fixture::idempotent_pair()) == false);
  CHECK(is_integrally_closed(fixture::trivial()));
  for (const auto& A : enumerate_pomonoids(3, Structure::pomonoid, false))
    if (is_integral(A)) CHECK(is_integrally_closed(A));
}

TEST_CASE("is_cancellative") {
  CHECK(is_cancellative(fixture::trivial()));
  CHECK_FALSE(is_cancellative(fixture::two_chain()));
  CHECK(is_cancellative(fixture::z2()));
  for (const auto& A : enumerate_pomonoids(3, Structure::pomonoid, false)) {
    bool absorbing = false;
    for (Elem z = 0; z < A.n; ++z) {
      bool abs = true;
      for (Elem a = 0; a < A.n; ++a) abs = abs && A.mul(z, a) == z && A.mul(a, z) == z;
      absorbing = absorbing || abs;
    }
    if (absorbing && A.n >= 2) CHECK_FALSE(is_cancellative(A));
  }
}

TEST_CASE("ideal residuation") {
  CHECK(is_ideally_residuated(fixture::two_chain()));
  CHECK_FALSE(is_ideally_residuated(fixture::bottom_unit()));
  CHECK_THROWS_AS(ideal_residuals(fixture::bottom_unit(), 1, 0, Side::left), NotIdeallyResiduated);

  CHECK(ideal_residuals(fixture::two_chain(), 0, 0, Side::left) == std::vector<Elem>{1});

  for (const auto& A : enumerate_pomonoids(3, Structure::pomonoid, false)) {
    if (!is_ideally_residuated(A)) continue;
    for (Elem c = 0; c < A.n; ++c)
      CHECK(ideal_residuals(A, A.one(), c, Side::left) == std::vector<Elem>{c});
    if (!is_residuated(A)) continue;
    for (Elem a = 0; a < A.n; ++a)
      for (Elem c = 0; c < A.n; ++c)
        for (Side s : {Side::left, Side::right})
          CHECK(ideal_residuals(A, a, c, s) == std::vector<Elem>{*A.residual(a, c, s)});
  }
}

TEST_CASE("are_isomorphic") {
  const auto A = fixture::chain3();
  const auto id = are_isomorphic(A, A, {Structure::sl_monoid, true});
  REQUIRE(id);
  CHECK(*id == std::vector<Elem>{0, 1, 2});

  const std::vector<Elem> perm{2, 0, 1};
  const auto B = detail::relabel(A, perm);
  const auto found = are_isomorphic(A, B, kPomonoid);
  REQUIRE(found);
  CHECK(*found == perm);

  const auto antichain = fixture::make(2, 1, {}, {0, 0, 0, 1});
  CHECK_FALSE(are_isomorphic(fixture::two_chain(), antichain, kPomonoid));
}

TEST_CASE("catalog sizes match the brute-force oracle", "[slow]") {
  int pom = 0, comm = 0, sl = 0, semi = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto c = oracle::count_catalog(n);
    pom += c.pomonoids;
    comm += c.commutative;
    sl += c.sl;
    semi += c.posemigroups;
    CHECK(enumerate_pomonoids(n, Structure::pomonoid, false).size() == std::size_t(pom));
    CHECK(enumerate_pomonoids(n, Structure::pomonoid, true).size() == std::size_t(comm));
    CHECK(enumerate_pomonoids(n, Structure::sl_monoid, false).size() == std::size_t(sl));
    CHECK(enumerate_pomonoids(n, Structure::posemigroup, false).size() == std::size_t(semi));
    CHECK(pom == regression::pomonoids[n - 1]);
    CHECK(comm == regression::commutative_pomonoids[n - 1]);
    CHECK(sl == regression::sl_monoids[n - 1]);
    CHECK(semi == regression::posemigroups[n - 1]);
  }
}

TEST_CASE("catalog members are valid and pairwise non-isomorphic") {
  const auto cat = enumerate_pomonoids(3, Structure::pomonoid, false);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(validate(cat[i], kPomonoid).ok());
    for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK_FALSE(oracle::isomorphic(cat[i], cat[j]));
  }
  for (const auto& A : enumerate_pomonoids(3, Structure::sl_monoid, false))
    CHECK(validate(A, kind_of(A)).ok());
  CHECK(enumerate_pomonoids(1, Structure::pomonoid, false).size() == 1);
  CHECK_THROWS_AS(enumerate_pomonoids(5, Structure::pomonoid, false), StructuralError);
}

TEST_CASE("residuated catalog members validate as residuated") {
  for (const auto& A : enumerate_pomonoids(3, Structure::residuated, false)) {
    CHECK(is_residuated(A));
    CHECK(validate(A, {Structure::residuated, false}).ok());
  }
}

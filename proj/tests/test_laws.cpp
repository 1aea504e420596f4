#include <catch_amalgamated.hpp>

#include <set>

#include <nucpre/laws.hpp>
#include <nucpre/regression.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nucpre;

namespace {

bool same_formula(const QuasiInequality& a, const QuasiInequality& b) {
  return a.premises == b.premises && a.conclusion == b.conclusion;
}

bool contains(const std::vector<QuasiInequality>& xs, const std::string& text) {
  const auto phi = parse_quasi(text);
  return std::any_of(xs.begin(), xs.end(), [&](const QuasiInequality& q) { return same_formula(q, phi); });
}

// Everything is below everything.
struct AllLe {
  FreePreimage inner;
  const FinitePomonoid& base() const { return inner.base(); }
  bool le(const Word&, const Word&) const { return true; }
};

}  // namespace

TEST_CASE("parse and print quasi-inequalities") {
  const auto phi = parse_quasi("x*y <= x => y <= 1");
  CHECK(phi.premises.size() == 1);
  CHECK(phi.var_count() == 2);
  CHECK(to_string(phi) == "x*y <= x => y <= 1");
  CHECK(to_string(parse_quasi("(a | b)*g(c) <= a")) == "(a | b)*g(c) <= a");
  CHECK_THROWS_AS(parse_quasi("x <="), StructuralError);
  CHECK_THROWS_AS(parse_quasi("x <= y & y <= x"), StructuralError);
}

TEST_CASE("classify") {
  CHECK(classify(parse_quasi("x*y <= x => y <= 1")) == QuasiClass::simple);
  CHECK(classify(parse_quasi("y*x <= x => y <= 1")) == QuasiClass::simple);
  CHECK(classify(parse_quasi("x*y <= x => y*z <= z")) == QuasiClass::simple);
  CHECK(classify(parse_quasi("x*x <= 1 => x <= 1")) == QuasiClass::unital_simple);
  CHECK(classify(parse_quasi("x <= y*z => x <= y")) == QuasiClass::general);
  CHECK(classify(parse_quasi("x <= g(y) => g(x) <= g(y)")) == QuasiClass::simple);
}

TEST_CASE("eval_quasi examples") {
  for (const auto& A : enumerate_pomonoids(3, Structure::pomonoid, false)) {
    CHECK_FALSE(eval_quasi(parse_quasi("x <= x"), A));
    if (is_integral(A)) {
      CHECK_FALSE(eval_quasi(parse_quasi("x*y <= x => y <= 1"), A));
      CHECK_FALSE(eval_quasi(parse_quasi("y*x <= x => y <= 1"), A));
    }
  }
  const auto A = fixture::two_chain();
  const auto w = eval_quasi(parse_quasi("x*z <= y*z => x <= y"), A);
  REQUIRE(w);
  const auto& e = *w;
  CHECK(A.le(A.mul(e[0], e[2]), A.mul(e[1], e[2])));
  CHECK_FALSE(A.le(e[0], e[1]));

  CHECK_THROWS_AS(eval_quasi(parse_quasi("x | y <= x"), A), SignatureMismatch);
  CHECK_THROWS_AS(eval_quasi(parse_quasi("x <= g(x)"), A), SignatureMismatch);
  CHECK_THROWS_AS(eval_quasi(parse_quasi("x <= 1"), fixture::left_zero()), SignatureMismatch);
}

TEST_CASE("eval_quasi agrees with recursive evaluation") {
  const auto stream = generate_simple(2, 3, {false});
  const auto cat = enumerate_pomonoids(2, Structure::pomonoid, false);
  for (const auto& A : cat)
    for (const auto& g : enumerate_nuclei(A))
      for (const auto& phi : stream) CHECK(eval_quasi(phi, A, &g).has_value() == !oracle::valid(phi, A, &g.map));

  const auto joins = generate_simple(2, 2, {true});
  for (const auto& A : enumerate_pomonoids(3, Structure::sl_monoid, false)) {
    const auto g = enumerate_nuclei(A).back();
    for (const auto& phi : joins) CHECK(eval_quasi(phi, A, &g).has_value() == !oracle::valid(phi, A, &g.map));
  }
}

TEST_CASE("generate_simple") {
  const auto plain = generate_simple(2, 3, {false});
  const auto join = generate_simple(2, 3, {true});
  CHECK(int(plain.size()) == regression::simple_stream_plain);
  CHECK(int(join.size()) == regression::simple_stream_join);
  CHECK(generate_simple(2, 3, {false}).size() == plain.size());

  std::set<std::string> seen;
  for (const auto& phi : plain) {
    CHECK(classify(phi) == QuasiClass::simple);
    CHECK(phi.premises.size() <= 1);
    seen.insert(to_string(phi));
  }
  CHECK(seen.size() == plain.size());

  CHECK(contains(plain, "x*y <= x => y <= 1"));
  CHECK(contains(plain, "y*x <= x => y <= 1"));
  CHECK(contains(plain, "x*y <= x => y*z <= z"));
  CHECK(contains(plain, "y*x <= x => z*y <= z"));

  for (const auto& phi : generate_simple(0, 3, {false})) {
    CHECK(phi.conclusion.lhs.args.empty());
    CHECK(phi.conclusion.rhs.args.empty());
    for (const auto& p : phi.premises) CHECK(p.rhs.op == Term::Op::var);
  }
  CHECK_THROWS_AS(generate_simple(3, 3, {false}), StructuralError);
}

TEST_CASE("simple formulas pass to nuclear images") {
  const auto stream = generate_simple(2, 3, {false});
  for (const auto& A : enumerate_pomonoids(2, Structure::pomonoid, false))
    for (const auto& g : enumerate_nuclei(A)) {
      const auto B = nuclear_image(A, g);
      const auto gB = identity_nucleus(B);
      for (const auto& phi : stream)
        if (oracle::valid(phi, A, &g.map)) CHECK(oracle::valid(phi, B, &gB.map));
    }
}

TEST_CASE("square tables") {
  CHECK(square_tables(1, 1, true).size() == 1);
  CHECK(square_tables(1, 1, false).size() == 1);
  CHECK_THROWS_AS(square_tables(5, 1, true), StructuralError);

  // xy <= x^2 v y^2
  const SquareTable xy{2, 2, {{{0}, {1}}, {{0}, {1}}}};
  const auto two = square_tables(2, 2, true);
  CHECK(std::find(two.begin(), two.end(), xy) != two.end());

  // a 3 x 3 table over four variables with a column x1*x1*x4
  bool found = false;
  for (const auto& t : square_tables(3, 4, true))
    for (int c = 0; c < 3 && !found; ++c) {
      std::multiset<int> col;
      for (const auto& row : t.rows) col.insert(row[c].begin(), row[c].end());
      found = col == std::multiset<int>{0, 0, 3};
    }
  CHECK(found);

  // every row uses each variable once
  for (const auto& t : square_tables(3, 3, false))
    for (const auto& row : t.rows) {
      std::vector<int> vs;
      for (const auto& cell : row) vs.insert(vs.end(), cell.begin(), cell.end());
      CHECK(vs == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("square condition") {
  CHECK_FALSE(check_square_condition(fixture::trivial(), 3));
  for (const auto& A : enumerate_pomonoids(3, Structure::sl_monoid, true))
    if (is_cancellative(A)) CHECK_FALSE(check_square_condition(A, 3));

  int violators = 0;
  for (const auto& A : enumerate_pomonoids(3, Structure::sl_monoid, true)) {
    bool bad = false;
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y)
        bad = bad || !A.le(A.mul(x, y), A.join(A.mul(x, x), A.mul(y, y)));
    if (!bad) continue;
    ++violators;
    const auto w = check_square_condition(A, 2);
    REQUIRE(w);
    CHECK_FALSE(w->y);
    const auto& e = w->assignment;
    Elem pi = A.one(), bound = detail::column_product(A, w->table, 0, e);
    for (Elem v : e) pi = A.mul(pi, v);
    for (int c = 1; c < w->table.n; ++c) bound = A.join(bound, detail::column_product(A, w->table, c, e));
    CHECK_FALSE(A.le(pi, bound));
  }
  CHECK(violators > 0);
}

TEST_CASE("power bridge") {
  const auto cat = enumerate_pomonoids(3, Structure::pomonoid, true);
  for (const auto& A : cat) {
    INFO(A.name);
    CHECK_FALSE(check_power_bridge(FreePreimage(A, {Shape::unital, true}), 3, 3));
  }
  for (const auto& A : enumerate_pomonoids(3, Structure::pomonoid, false))
    if (!A.is_commutative()) {
      CHECK_THROWS_AS(check_power_bridge(FreePreimage(A, {Shape::unital, false}), 2, 2), StructuralError);
      break;
    }

  for (const auto& A : cat) {
    if (!check_square_condition(A, 3, 3, true)) continue;
    const AllLe bad{FreePreimage(A, {Shape::unital, true})};
    const auto d = check_power_bridge(bad, 3, 3);
    REQUIRE(d);
    CHECK_FALSE(d->square_holds);
    CHECK(d->words_hold);
    break;
  }
}

TEST_CASE("Id cancellativity") {
  const auto one = check_id_cancel_criterion(fixture::trivial(), 1);
  CHECK(one.id_cancellative);
  CHECK(one.sentences_hold);

  for (const auto& A : enumerate_pomonoids(3, Structure::pomonoid, true)) {
    if (A.n == 1) continue;
    const auto w = id_cancellativity_witness(A);
    REQUIRE(w);
    const IdAlgebra<ElementCarrier> id{ElementCarrier(A)};
    const bool left = w->side == Side::left;
    CHECK(id.le(left ? id.mult(w->a, w->b) : id.mult(w->b, w->a),
                left ? id.mult(w->a, w->c) : id.mult(w->c, w->a)));
    CHECK_FALSE(id.le(w->b, w->c));
  }

  for (const auto& A : enumerate_pomonoids(3, Structure::sl_monoid, false)) {
    const int bound = int(all_antichains(ElementCarrier(A)).size());
    const auto rep = check_id_cancel_criterion(A, bound);
    CHECK(rep.id_cancellative == rep.sentences_hold);
    if (rep.violation) {
      const auto w = witness_from_cycle(A, *rep.violation);
      const IdAlgebra<ElementCarrier> id{ElementCarrier(A)};
      const bool left = w.side == Side::left;
      CHECK(id.le(left ? id.mult(w.a, w.b) : id.mult(w.b, w.a), left ? id.mult(w.a, w.c) : id.mult(w.c, w.a)));
      CHECK_FALSE(id.le(w.b, w.c));
    }
  }
}

TEST_CASE("x^n <= y^n") {
  for (const auto& A : enumerate_pomonoids(3, Structure::sl_monoid, true))
    if (is_cancellative(A)) CHECK_FALSE(check_xn_yn(A));
  const auto w = check_xn_yn(fixture::two_chain(), 1);
  CHECK_FALSE(w);
  // 0 < 1 < 2 = unit, 1.1 = 0
  const auto z = check_xn_yn(fixture::make(3, 2, {{0, 1}, {1, 2}}, {0, 0, 0, 0, 0, 1, 0, 1, 2}), 2);
  REQUIRE(z);
  CHECK(z->n == 2);
}

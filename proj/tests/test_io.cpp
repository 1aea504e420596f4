#include <catch_amalgamated.hpp>

#include <filesystem>

#include <nucpre/io.hpp>

#include "fixtures.hpp"

using namespace nucpre;

namespace {

const std::string kData = NUCPRE_DATA;

std::string chain_text(const std::string& extra = "") {
  return "slmonoid c\nelements 2\nunit 1\nle 0 1\n"
         "mult 0 0 0\nmult 0 1 0\nmult 1 0 0\nmult 1 1 1\n" + extra;
}

}  // namespace

TEST_CASE("serialize then parse is the identity on catalogs") {
  for (auto kind : {Structure::pomonoid, Structure::sl_monoid, Structure::posemigroup})
    for (const auto& A : enumerate_pomonoids(3, kind, false)) {
      const auto back = parse_algebra(serialize(A)).algebra;
      CHECK(back == A);
      CHECK(back.name == A.name);
    }
  AlgebraFile f{fixture::chain3(), {Nucleus{"g", {0, 0, 2}}}};
  const auto g = parse_algebra(serialize(f));
  REQUIRE(g.nuclei.size() == 1);
  CHECK(g.nuclei[0].name == "g");
  CHECK(g.nuclei[0].map == std::vector<Elem>{0, 0, 2});
}

TEST_CASE("sample files") {
  const auto c = load_algebra(kData + "/chain3.alg");
  CHECK(c.algebra == fixture::chain3());
  REQUIRE(c.nuclei.size() == 1);
  CHECK(validate_nucleus(c.algebra, c.nuclei[0]).ok());
  CHECK(load_algebra(kData + "/z2.alg").algebra == fixture::z2());
  const auto bad = load_algebra(kData + "/nonassoc.alg").algebra;
  CHECK(validate(bad, {Structure::posemigroup, false}).has("associative"));
  CHECK_THROWS_AS(load_algebra(kData + "/nothere.alg"), std::ios_base::failure);
}

TEST_CASE("slmonoid joins are derived when absent") {
  const auto A = parse_algebra(chain_text()).algebra;
  REQUIRE(A.has_join());
  CHECK(A.join(0, 1) == 1);
  CHECK(A == parse_algebra(chain_text("join 0 0 0\njoin 0 1 1\njoin 1 0 1\njoin 1 1 1\n")).algebra);
  // two maximal elements have no join
  CHECK_THROWS_AS(parse_algebra("slmonoid d\nelements 2\nunit 0\nmult 0 0 0\nmult 0 1 1\nmult 1 0 1\nmult 1 1 0\n"),
                  ParseError);
}

TEST_CASE("malformed algebra text") {
  const std::vector<std::string> bad{
      "",
      "elements 2\n",
      "pomonoid a\nunit 0\n",
      "pomonoid a\nelements 1\nmult 0 0 0\n",
      "pomonoid a\nelements 1\nunit 0\n",
      "pomonoid a\nelements 1\nunit 0\nmult 0 0 0\nmult 0 0 0\n",
      "pomonoid a\nelements 1\nunit 1\nmult 0 0 0\n",
      "pomonoid a\nelements x\n",
      "pomonoid a\nelements 1\nunit 0\nmult 0 0 0\nfrobnicate\n",
      "pomonoid a\nelements 1\nunit 0\nmult 0 0 0\njoin 0 0 0\n",
      "posemigroup a\nelements 1\nunit 0\n",
      "pomonoid a\nelements 2\nunit 0\nmult 0 0 0\nmult 0 1 1\nmult 1 0 1\nmult 1 1 0\nnucleus g\nmap 0 0\n",
      "pomonoid a\nelements 1\nunit 0\nmult 0 0 0\nmap 0 0\n",
      chain_text("join 0 0 0\n"),
  };
  for (const auto& text : bad) {
    INFO(text);
    CHECK_THROWS_AS(parse_algebra(text), ParseError);
  }
  CHECK_NOTHROW(parse_algebra("# comment\npomonoid a  # trailing\nelements 1\nunit 0\nmult 0 0 0\n"));
}

TEST_CASE("literals") {
  CHECK(parse_word("[0,2,1]") == Word{0, 2, 1});
  CHECK(parse_word(" [ 0 , 1 ] ") == Word{0, 1});
  CHECK(parse_word("[]").empty());
  CHECK(parse_word("e").empty());
  CHECK(to_literal(Word{}) == "e");
  CHECK(to_literal(Word{3, 0}) == "[3,0]");

  const auto s = parse_signed_word("[2,~3,1]");
  REQUIRE(s.size() == 3);
  CHECK(s.letters[1].negative);
  CHECK(s.letters[1].elem == 3);
  CHECK(to_literal(s) == "[2,~3,1]");

  const auto a = parse_word_antichain("{[0],[1,2]}");
  CHECK(a.gens == std::vector<Word>{Word{0}, Word{1, 2}});
  CHECK(to_literal(a) == "{[0],[1,2]}");
  CHECK(parse_elem_antichain("{0,2}").gens == std::vector<Elem>{0, 2});
  CHECK(to_literal(parse_elem_antichain("{0,2}")) == "{0,2}");

  for (const char* bad : {"[0,", "0,1", "[a]", "[0]]", "[~0]", "{}", "[0 1]"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_word(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_signed_word("[~]"), ParseError);
  CHECK_THROWS_AS(parse_word_antichain("{[0]"), ParseError);
  CHECK_THROWS_AS(check_letters(fixture::two_chain(), Word{2}), StructuralError);
  CHECK_NOTHROW(check_letters(fixture::two_chain(), Word{0, 1}));
}

TEST_CASE("proof text names rules and side conditions") {
  const Proof p{parse_signed_word("[1,~1]"),
                {{Rule::contraction, 0, {}, Word{1}, Word{1}, {}, {}}},
                SignedWord{}};
  const auto t = to_text(p);
  CHECK(t.find("contraction") != std::string::npos);
  CHECK(t.find("[1] <= [1]") != std::string::npos);
}

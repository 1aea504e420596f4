#include <catch_amalgamated.hpp>

#include <filesystem>

#include <nucpre/harness.hpp>

#include "fixtures.hpp"

using namespace nucpre;

namespace {

std::vector<std::string> ids(const std::vector<VerificationReport>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(r.id);
  return out;
}

}  // namespace

TEST_CASE("the suite passes at n_max 1 and 2") {
  for (int n : {1, 2}) {
    SuiteConfig cfg;
    cfg.n_max = n;
    cfg.n_square = 2;
    std::vector<std::string> streamed;
    const auto rs = run_suite(cfg, [&](const VerificationReport& r) { streamed.push_back(r.id); });
    REQUIRE(rs.size() == suite::rows().size());
    CHECK(streamed == ids(rs));
    for (const auto& r : rs) {
      INFO(r.id << " " << r.witness);
      CHECK(r.status == Status::pass);
      CHECK(r.witness.empty());
    }
  }
}

TEST_CASE("suite reports are deterministic") {
  SuiteConfig cfg;
  cfg.n_max = 2;
  cfg.n_square = 2;
  const auto a = run_suite(cfg), b = run_suite(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].witness == b[i].witness);
    CHECK(a[i].note == b[i].note);
  }
}

TEST_CASE("suite configuration bounds") {
  SuiteConfig cfg;
  cfg.n_max = 0;
  CHECK_THROWS_AS(run_suite(cfg), StructuralError);
  cfg.n_max = 5;
  CHECK_THROWS_AS(run_suite(cfg), StructuralError);
}

TEST_CASE("catalog cache round trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "nucpre-cache-test";
  fs::remove_all(dir);
  const auto fresh = load_catalog(3, Structure::sl_monoid, false, dir.string());
  CHECK(fresh == enumerate_pomonoids(3, Structure::sl_monoid, false));
  const auto cached = load_catalog(3, Structure::sl_monoid, false, dir.string());
  CHECK(cached == fresh);

  // a tampered cache file is regenerated
  REQUIRE(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
  const fs::path file = fs::directory_iterator(dir)->path();
  { std::ofstream(file, std::ios::app) << "pomonoid junk\nelements 1\nunit 0\nmult 0 0 0\n"; }
  CHECK(load_catalog(3, Structure::sl_monoid, false, dir.string()) == fresh);
  CHECK(load_catalog(3, Structure::sl_monoid, false, dir.string()) == fresh);
  fs::remove_all(dir);
}

TEST_CASE("triangle identities") {
  for (const auto& A : enumerate_pomonoids(3, Structure::pomonoid, false)) CHECK_FALSE(check_triangle_identities(A, 3));
  for (const auto& A : enumerate_pomonoids(3, Structure::sl_monoid, false)) CHECK_FALSE(check_triangle_identities(A, 2));
  CHECK_THROWS_AS(check_triangle_identities(fixture::left_zero(), 2), StructuralError);
}

TEST_CASE("signed word enumeration") {
  const auto ws = signed_words(2, 2, 1);
  // 4 of length 1, 16 of length 2 minus the 4 with two negative letters
  CHECK(ws.size() == 16);
  for (const auto& w : ws) CHECK(w.rank() <= 1);
}

TEST_CASE("variants") {
  CHECK(variants_for(fixture::chain3()).size() == 6);
  CHECK(variants_for(fixture::left_zero()).size() == 1);
  CHECK(variant_name({Shape::unital, true}) == "umon --commutative");
}

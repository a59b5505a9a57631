#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "errors.hpp"
#include "guessing/guessing.hpp"
#include "oracles.hpp"
#include "service/cache.hpp"
#include "service/pipeline.hpp"

using namespace w123;
using namespace w123::service;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("w123-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

Context cached(const TempDir& d) {
  Context c;
  c.cache.emplace(d.path);
  return c;
}

}  // namespace

TEST_SUITE("service") {

TEST_CASE("sha256 of known inputs") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache round trip and invalidation") {
  TempDir d;
  Cache cache(d.path, "1.0");
  CacheKey key{"sequence", 2, {{"nmax", 5}}};
  CHECK_FALSE(cache.load(key));
  nlohmann::json payload = {{"terms", {"1", "1", "6", "43"}}};
  cache.store(key, payload);
  REQUIRE(cache.load(key));
  CHECK(*cache.load(key) == payload);

  CHECK_FALSE(Cache(d.path, "1.1").load(key));
  CHECK_FALSE(cache.load(CacheKey{"sequence", 2, {{"nmax", 6}}}));
  CHECK_FALSE(cache.load(CacheKey{"sequence", 3, {{"nmax", 5}}}));

  SUBCASE("a tampered payload is a miss") {
    auto file = cache.path_for(key);
    std::ifstream in(file);
    auto entry = nlohmann::json::parse(in);
    in.close();
    entry["payload"]["terms"][3] = "44";
    std::ofstream(file) << entry.dump();
    CHECK_FALSE(cache.load(key));
  }
  SUBCASE("a corrupt file is a miss") {
    std::ofstream(cache.path_for(key)) << "{not json";
    CHECK_FALSE(cache.load(key));
  }
}

TEST_CASE("count methods agree") {
  Context none;
  for (unsigned r = 1; r <= 3; ++r) {
    const unsigned nmax = 12 / r;
    auto a = count_terms(none, r, nmax, CountMethod::brute);
    CHECK(count_terms(none, r, nmax, CountMethod::recurrence) == a);
    CHECK(count_terms(none, r, nmax, CountMethod::scheme) == a);
    CHECK(count_terms(none, r, nmax, CountMethod::linear_rec) == a);
  }
  CHECK(count_terms(none, 1, 20, CountMethod::scheme).terms == oracle::catalan_prefix(20));
  CHECK_THROWS_AS(count_terms(none, 3, 5, CountMethod::brute), CapExceeded);
  CHECK_THROWS_AS(count_terms(none, 0, 5, CountMethod::scheme), InvalidArgument);
  CHECK_THROWS_AS(count_terms(none, 5, 5, CountMethod::linear_rec), NotAvailable);
  CHECK_THROWS_AS(count_method_from_string("guess"), InvalidArgument);
  CHECK(count_method_from_string("linear-rec") == CountMethod::linear_rec);
}

TEST_CASE("cache hits equal cold computation") {
  TempDir d;
  auto ctx = cached(d);
  Context cold;
  auto first = count_terms(ctx, 2, 30, CountMethod::scheme);
  auto hit = count_terms(ctx, 2, 30, CountMethod::scheme);
  CHECK(hit == first);
  CHECK(count_terms(cold, 2, 30, CountMethod::scheme) == first);

  auto e1 = run_elimination(ctx, 2, elimination::Backend::resultants, 30);
  auto e2 = run_elimination(ctx, 2, elimination::Backend::resultants, 30);
  CHECK(e1.to_json() == e2.to_json());
  CHECK(run_elimination(cold, 2, elimination::Backend::resultants, 30).to_json() == e1.to_json());

  auto g1 = run_guess(ctx, 2, 3, 4);
  auto g2 = run_guess(ctx, 2, 3, 4);
  CHECK(g1.to_json() == g2.to_json());
  CHECK(run_guess(cold, 2, 3, 4).to_json() == g1.to_json());
}

TEST_CASE("a guessed recurrence enables linear-rec counting") {
  TempDir d;
  auto ctx = cached(d);
  CHECK_THROWS_AS(count_terms(ctx, 4, 10, CountMethod::linear_rec), NotAvailable);
  auto g = run_guess(ctx, 4);
  REQUIRE(g.recurrence);
  CHECK(g.passed());
  CHECK_FALSE(g.matches_published);
  REQUIRE(known_recurrence(ctx, 4));
  CHECK(count_terms(ctx, 4, 10, CountMethod::linear_rec) == count_terms(Context{}, 4, 10, CountMethod::scheme));
}

TEST_CASE("rendering") {
  scheme::CountSequence s{1, {1, 1, 2, 5, 14, 42}};
  CHECK(render_sequence(s, CountMethod::scheme, Format::text) == "1 1 2 5 14 42\n");
  auto j = nlohmann::json::parse(render_sequence(s, CountMethod::scheme, Format::json));
  CHECK(j.at("schema") == "w123.sequence/1");
  CHECK(j.at("terms").at(5) == "42");
  CHECK(j.at("nmax") == 5);
  auto b = render_sequence(s, CountMethod::scheme, Format::bfile);
  CHECK(b.find("\n0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n") != std::string::npos);
  CHECK(b.rfind("#", 0) == 0);
  CHECK_THROWS_AS(render_scheme(scheme::build_scheme(2), Format::bfile), InvalidArgument);
}

TEST_CASE("elimination outcome") {
  Context none;
  auto o = run_elimination(none, 2, elimination::Backend::resultants, 30);
  CHECK(o.passed());
  REQUIRE(o.match);
  CHECK(o.match->verdict == elimination::MatchVerdict::equal);
  auto j = o.to_json();
  CHECK(j.at("schema") == "w123.elimination/1");
  CHECK(o.to_text().find("equal") != std::string::npos);
}

TEST_CASE("asymptotics outcome") {
  Context none;
  auto o = run_asymptotics(none, 2, 600, 0.01);
  CHECK(o.passed);
  CHECK(o.json.at("r") == 2);
  CHECK_FALSE(o.text.empty());
}

}  // TEST_SUITE

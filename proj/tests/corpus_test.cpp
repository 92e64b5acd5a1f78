#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qsets/corpus.hpp"
#include "qsets/error.hpp"

using namespace qsets;
using namespace qsets::corpus;

namespace {

bool all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) {
    INFO(r.suite << ": " << r.name << " -- " << r.witness);
    CHECK(r.passed);
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("FNV-1a digests") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
  }

  TEST_CASE("power-set filter agrees with the naive oracle") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 40; ++k) {
      auto x = random_quantum_set(rng, 8);
      auto expected = oracle::all_closed(oracle::graph_of(x));
      auto got = brute_force_qsubsets(x);
      REQUIRE(got.size() == expected.size());
      for (const auto& s : got) CHECK(std::find(expected.begin(), expected.end(), oracle::to_bits(s)) != expected.end());
    }
  }

  TEST_CASE("small suites pass") {
    CHECK(all_passed(structure_suite(0, 3)));
    CHECK(all_passed(oracle_suite(9, 20, 8)));
    CHECK(all_passed(correspondence_suite(3)));
    CHECK(all_passed(commutation_suite(3)));
    CHECK(all_passed(examples_suite()));
  }

  TEST_CASE("reports are versioned and byte-stable") {
    CorpusSpec spec;
    spec.suites = {"oracle", "examples"};
    spec.random_cases = 10;
    spec.random_max_n = 8;
    auto a = run_corpus(spec, "test");
    auto b = run_corpus(spec, "test");
    CHECK(a.serialize() == b.serialize());
    auto j = a.to_json();
    CHECK(j["format"] == "qsets-report/1");
    CHECK(j["exit_status"] == 0);
    CHECK(j.contains("duration_ms") == false);
    spec.seed = 2;
    CHECK(run_corpus(spec, "test").to_json()["inputs"] != j["inputs"]);
    spec.timing = true;
    CHECK(run_corpus(spec, "test").duration_ms.has_value());
  }

  TEST_CASE("failures set exit status 1") {
    RunReport r;
    r.checks.push_back({"s", "n", false, 1, "w"});
    CHECK(r.exit_status() == 1);
    CHECK_THROWS_AS(run_suite("nope", CorpusSpec{}), InputError);
  }
}

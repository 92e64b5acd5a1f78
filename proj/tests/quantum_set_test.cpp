#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qsets/error.hpp"
#include "qsets/quantum_set.hpp"

using namespace qsets;

namespace {

ElementSet random_subset(std::size_t n, std::mt19937_64& rng) { return oracle::to_set(oracle::from_mask(n, rng())); }

}  // namespace

TEST_SUITE("quantum_set") {
  TEST_CASE("construction enforces the relation axioms") {
    CHECK_THROWS_WITH_AS(QuantumSet({"a", "b"}, {{"a", "a"}}), doctest::Contains("self-pair"), InputError);
    CHECK_THROWS_AS(QuantumSet({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(QuantumSet({"a"}, {{"a", "z"}}), InputError);
    QuantumSet x({"a", "b"}, {{"a", "b"}});
    CHECK(x.q_distinct(1, 0));
    QuantumSet empty({}, {});
    CHECK(empty.size() == 0);
    CHECK(closure(empty, empty.empty_set()) == empty.empty_set());
  }

  TEST_CASE("4-cycle: {1}^⊥ = {2,4}, closure {1,3}") {
    auto x = quantum_sets::cycle(4);
    CHECK(qcomplement(x, x.subset({"1"})) == x.subset({"2", "4"}));
    CHECK(closure(x, x.subset({"1"})) == x.subset({"1", "3"}));
    CHECK(describe(x, x.subset({"1", "3"})) == "{1,3}");
  }

  TEST_CASE("MO2 graph: {a} ∨ {b} = X") {
    auto x = quantum_sets::mo2_graph();
    CHECK(x.size() == 4);
    CHECK(x.edge_count() == 2);
    CHECK(qunion(x, x.subset({"a"}), x.subset({"b"})).is_full());
    CHECK_THROWS_AS(qunion(x, x.subset({"a", "b"}), x.subset({"b"})), PreconditionError);
  }

  TEST_CASE("5-cycle: relative closure of {1} inside {1,3} is {1,3}") {
    auto x = quantum_sets::cycle(5);
    CHECK(relative_closure(x, x.subset({"1", "3"}), x.subset({"1"})) == x.subset({"1", "3"}));
    CHECK_THROWS_AS(relative_closure(x, x.subset({"1"}), x.subset({"2"})), PreconditionError);
  }

  TEST_CASE("complement agrees with the naive oracle") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
      const std::size_t n = rng() % 10;
      auto x = quantum_sets::from_edge_mask(n, rng());
      auto g = oracle::graph_of(x);
      auto d = random_subset(n, rng);
      CHECK(oracle::to_bits(qcomplement(x, d)) == oracle::perp(g, oracle::to_bits(d)));
    }
  }

  TEST_CASE("Galois laws: antitone, extensive closure, triple complement, De Morgan") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 300; ++k) {
      const std::size_t n = 1 + rng() % 12;
      auto x = quantum_sets::from_edge_mask(n, rng() & rng());
      auto a = random_subset(n, rng);
      auto b = a & random_subset(n, rng);
      CHECK(qcomplement(x, a).is_subset_of(qcomplement(x, b)));
      CHECK(a.is_subset_of(closure(x, a)));
      CHECK(closure(x, closure(x, a)) == closure(x, a));
      CHECK(qcomplement(x, closure(x, a)) == qcomplement(x, a));
      auto c = random_subset(n, rng);
      CHECK(qcomplement(x, a | c) == (qcomplement(x, a) & qcomplement(x, c)));
      // Galois: D ⊆ E^⊥ iff E ⊆ D^⊥.
      CHECK(a.is_subset_of(qcomplement(x, c)) == c.is_subset_of(qcomplement(x, a)));
    }
  }

  TEST_CASE("classical and discrete extremes") {
    auto c = quantum_sets::classical(5);
    CHECK(c.is_classical());
    auto d = ElementSet(5, {1, 3});
    CHECK(qcomplement(c, d) == d.complement());
    CHECK(closure(c, d) == d);
    auto disc = quantum_sets::discrete(5);
    CHECK(closure(disc, d).is_full());
    CHECK(closure(disc, disc.empty_set()).empty());
  }

  TEST_CASE("strict quantum bijections") {
    auto x = quantum_sets::cycle(4);
    CHECK(is_strict_quantum_bijection({x, x, {1, 2, 3, 0}}));
    CHECK_FALSE(is_strict_quantum_bijection({x, x, {1, 0, 2, 3}}));
    CHECK_THROWS_AS(is_strict_quantum_bijection({x, x, {0, 0, 2, 3}}), PreconditionError);
  }

  TEST_CASE("subset q-commutation") {
    auto x = quantum_sets::mo2_graph();
    CHECK(subsets_qcommute(x, x.subset({"a"}), x.subset({"a'"})));
    CHECK_FALSE(subsets_qcommute(x, x.subset({"a"}), x.subset({"b"})));
    auto c = quantum_sets::classical(4);
    CHECK(subsets_qcommute(c, ElementSet(4, {0, 1}), ElementSet(4, {1, 2})));
  }

  TEST_CASE("orthogonal sum makes all cross pairs q-distinct") {
    auto s = quantum_sets::orthogonal_sum(quantum_sets::mo2_graph(), quantum_sets::mo2_graph());
    CHECK(s.size() == 8);
    CHECK(s.edge_count() == 2 + 2 + 16);
  }
}

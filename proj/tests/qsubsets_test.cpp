#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "qsets/error.hpp"
#include "qsets/qsubsets.hpp"

using namespace qsets;

TEST_SUITE("qsubsets") {
  TEST_CASE("enumeration equals the power-set oracle, in lectic order") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = rng() % 11;
      auto x = quantum_sets::from_edge_mask(n, rng() | rng());
      auto expected = oracle::all_closed(oracle::graph_of(x));
      std::sort(expected.begin(), expected.end(), oracle::lectic_less);
      auto got = next_closure_enumeration(x);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(oracle::to_bits(got[i]) == expected[i]);
    }
  }

  TEST_CASE("worked examples") {
    auto c4 = quantum_sets::cycle(4);
    auto q4 = enumerate_qsubsets(c4);
    REQUIRE(q4.size() == 4);
    CHECK(q4[0].empty());
    CHECK(q4.find(c4.subset({"1", "3"})));
    CHECK(q4.find(c4.subset({"2", "4"})));
    CHECK(q4[3].is_full());

    auto mo2 = quantum_sets::mo2_graph();
    CHECK(enumerate_qsubsets(mo2).size() == 6);
    CHECK(is_hereditary(mo2));
    CHECK_FALSE(hereditary_witness(mo2));

    auto c5 = quantum_sets::cycle(5);
    CHECK(is_atomic(c5));
    CHECK_FALSE(is_hereditary(c5));
    auto w = hereditary_witness(c5);
    REQUIRE(w);
    CHECK(w->first.is_subset_of(w->second));
    CHECK(w->first != w->second);
    CHECK_FALSE(w->second.intersects(qcomplement(c5, w->first)));
  }

  TEST_CASE("enumeration limit is a resource error") {
    auto x = quantum_sets::classical(6);
    CHECK_THROWS_AS(next_closure_enumeration(x, 63), ResourceError);
    CHECK(next_closure_enumeration(x, 64).size() == 64);
    try {
      next_closure_enumeration(x, 10);
    } catch (const ResourceError& e) {
      CHECK(e.reached() > 10);
    }
  }

  TEST_CASE("lattice operations are ∩, closure of ∪ and complement") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = 1 + rng() % 7;
      auto x = quantum_sets::from_edge_mask(n, rng());
      auto q = enumerate_qsubsets(x);
      const auto& l = q.lattice();
      for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(q[l.ortho(i)] == qcomplement(x, q[i]));
        for (std::size_t j = 0; j < q.size(); ++j) {
          CHECK(q[l.meet(i, j)] == (q[i] & q[j]));
          CHECK(q[l.join(i, j)] == closure(x, q[i] | q[j]));
          CHECK(l.leq(i, j) == q[i].is_subset_of(q[j]));
        }
      }
    }
  }

  TEST_CASE("hereditary by definition matches the witness search") {
    for (std::uint64_t m = 0; m < 1024; m += 7) {
      auto x = quantum_sets::from_edge_mask(5, m);
      CHECK(is_hereditary(x) == !hereditary_witness(x).has_value());
    }
  }

  TEST_CASE("q-central elements") {
    auto mo2 = quantum_sets::mo2_graph();
    CHECK(qcentral_elements(mo2) == std::vector<ElementSet>{mo2.empty_set(), mo2.full_set()});

    auto sum = quantum_sets::orthogonal_sum(mo2, mo2);
    auto central = qcentral_elements(sum);
    ElementSet first(8, {0, 1, 2, 3});
    CHECK(central == std::vector<ElementSet>{sum.empty_set(), first.complement(), first, sum.full_set()});

    auto c = quantum_sets::classical(4);
    CHECK(qcentral_elements(c).size() == 16);
  }

  TEST_CASE("lattice of a large Q(X) is a resource error") {
    auto q = enumerate_qsubsets(quantum_sets::classical(12));
    CHECK(q.size() == 4096);
    CHECK_THROWS_AS(q.lattice(), ResourceError);
    CHECK_THROWS_AS(q.index_of(ElementSet(11)), PreconditionError);
  }
}

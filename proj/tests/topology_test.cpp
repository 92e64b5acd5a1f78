#include <doctest.h>

#include <random>

#include "qsets/error.hpp"
#include "qsets/lattice_corpus.hpp"
#include "qsets/topology.hpp"

using namespace qsets;

namespace {

// Families over n ≤ 3 points closed under ∪ and ∩ with ∅ and the whole set.
std::size_t naive_topology_count(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::size_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto has = [&](std::size_t s) { return (fam >> s) & 1U; };
    if (!has(0) || !has(subsets - 1)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < subsets && ok; ++a)
      for (std::size_t b = 0; b < subsets && ok; ++b)
        if (has(a) && has(b)) ok = has(a | b) && has(a & b);
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("topology counts") {
    for (std::size_t n = 0; n <= 3; ++n) CHECK(all_topologies(n).size() == naive_topology_count(n));
    CHECK(all_topologies(3).size() == 29);
    CHECK(all_topologies(4).size() == 355);
  }

  TEST_CASE("finite topology basics") {
    FiniteTopology s({"p", "q"}, {ElementSet(2), ElementSet(2, {0}), ElementSet::full(2)});
    CHECK(s.closure(ElementSet(2, {0})).is_full());
    CHECK(s.interior(ElementSet(2, {1})).empty());
    CHECK_THROWS_AS(FiniteTopology({"p", "q"}, {ElementSet(2, {0})}), InputError);
  }

  TEST_CASE("regular open sets of the Sierpiński space") {
    FiniteTopology s({"p", "q"}, {ElementSet(2), ElementSet(2, {0}), ElementSet::full(2)});
    auto r = regular_open_lattice(s);
    CHECK(r.sets.size() == 2);
    CHECK(r.verdict.ok());
    CHECK(r.distributive);
  }

  TEST_CASE("regular open sets of a 3-point space") {
    // Opens ∅, {1}, {2}, {1,2}, X: regular opens ∅, {1}, {2}, X.
    FiniteTopology t({"1", "2", "3"}, {ElementSet(3), ElementSet(3, {0}), ElementSet(3, {1}), ElementSet(3, {0, 1}),
                                       ElementSet::full(3)});
    auto r = regular_open_lattice(t);
    CHECK(r.sets.size() == 4);
    CHECK(r.orthomodular);
    CHECK(r.distributive);
    CHECK(r.join_matches_closure_formula);
  }

  TEST_CASE("random topologies are deterministic and Boolean on regular opens") {
    std::mt19937_64 a(5), b(5);
    for (int k = 0; k < 30; ++k) {
      auto t = random_topology(5, a);
      CHECK(t == random_topology(5, b));
      auto r = regular_open_lattice(t);
      CHECK(r.verdict.ok());
      CHECK(r.distributive);
    }
  }

  TEST_CASE("quantum topology axioms") {
    auto l = lattices::mo(2);
    auto at = [&](std::string_view s) { return *l.index_of(s); };
    CHECK(verify_quantum_topology(l, {l.bottom(), l.top()}).ok());
    CHECK(verify_quantum_topology(l, {l.bottom()}).violated == TopologyAxiom::S1);
    CHECK(verify_quantum_topology(l, {l.bottom(), at("a"), at("b"), l.top()}).ok());
    // a and a' q-commute, so their join must be present; it is 1 here.
    CHECK(verify_quantum_topology(l, {l.bottom(), at("a"), at("a'"), l.top()}).ok());
    auto b3 = lattices::boolean(3);
    auto v = verify_quantum_topology(b3, {b3.bottom(), *b3.index_of("{1,2}"), *b3.index_of("{2,3}"), b3.top()});
    CHECK(v.violated == TopologyAxiom::S2);
    auto w = verify_quantum_topology(b3, {b3.bottom(), *b3.index_of("{1}"), *b3.index_of("{2}"), b3.top()});
    CHECK(w.violated == TopologyAxiom::S3);
    CHECK_THROWS_AS(verify_quantum_topology(l, {99}), InputError);
  }

  TEST_CASE("generated topology") {
    auto x = quantum_sets::mo2_graph();
    auto q = enumerate_qsubsets(x);
    auto t = generate_topology(q, {x.subset({"a"})});
    CHECK(t.closed_sets() == std::vector<ElementSet>{x.empty_set(), x.subset({"a"}), x.full_set()});
    auto b3 = lattices::boolean(3);
    auto g = generate_topology(b3, {*b3.index_of("{1}"), *b3.index_of("{2}")});
    CHECK(g.size() == 5);  // 0, {1}, {2}, {1,2}, 1
  }

  TEST_CASE("strict quantum homeomorphisms") {
    auto c4 = quantum_sets::cycle(4);
    auto q = enumerate_qsubsets(c4);
    QuantumTopology odd(q, {c4.empty_set(), c4.subset({"1", "3"}), c4.full_set()});
    QuantumTopology even(q, {c4.empty_set(), c4.subset({"2", "4"}), c4.full_set()});
    ElementMap rot{c4, c4, {1, 2, 3, 0}};
    CHECK(is_strict_quantum_homeomorphism(rot, odd, even));
    CHECK_FALSE(is_strict_quantum_homeomorphism(rot, odd, odd));
    ElementMap bad{c4, c4, {1, 0, 2, 3}};
    CHECK_THROWS_AS(is_strict_quantum_homeomorphism(bad, odd, odd), PreconditionError);
    CHECK_THROWS_AS(QuantumTopology(q, {c4.subset({"1"})}), InputError);
  }

  TEST_CASE("classical spectrum") {
    auto g = classical_gelfand(3);
    CHECK(g.family().size() == 8);
    CHECK(g.carrier().parent().is_classical());
  }
}

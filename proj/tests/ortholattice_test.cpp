#include <doctest.h>

#include "qsets/error.hpp"
#include "qsets/lattice_corpus.hpp"
#include "qsets/ortholattice.hpp"

using namespace qsets;

namespace {

std::size_t at(const OrthoLattice& l, std::string_view label) { return *l.index_of(label); }

}  // namespace

TEST_SUITE("ortholattice") {
  TEST_CASE("standard corpus verifies") {
    for (const auto& [name, l] : lattices::standard_corpus()) {
      INFO(name);
      CHECK(verify_ortholattice(l.raw()).ok());
    }
    CHECK(lattices::boolean(3).size() == 8);
    CHECK(lattices::mo(4).size() == 10);
  }

  TEST_CASE("the 3-chain has no orthocomplementation") {
    auto v = verify_ortholattice(lattices::chain_raw(3));
    CHECK_FALSE(v.ok());
    CHECK(v.violated == OrthoAxiom::Complement);
    CHECK_THROWS_AS(lattices::chain(3), InputError);
  }

  TEST_CASE("axiom failures are named") {
    // c and d have two maximal common lower bounds.
    auto raw = raw_from_covers({"0", "a", "b", "c", "d", "1"},
                               {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}, {"c", "1"}, {"d", "1"}},
                               {{"a", "b"}, {"c", "d"}});
    auto v = verify_ortholattice(raw);
    CHECK(v.violated == OrthoAxiom::Meet);
    CHECK(axiom_name(v.violated) == "meet");
    CHECK_THROWS_AS(raw_from_covers({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, {}), InputError);
  }

  TEST_CASE("O6 is not orthomodular; MOn and Boolean algebras are") {
    auto o6 = lattices::o6();
    auto v = is_orthomodular(o6);
    CHECK_FALSE(v.orthomodular);
    REQUIRE(v.witness);
    CHECK(o6.leq(v.witness->first, v.witness->second));
    CHECK(is_orthomodular(lattices::mo(3)).orthomodular);
    CHECK(is_orthomodular(lattices::boolean(4)).orthomodular);
  }

  TEST_CASE("O6: a and b q-commute but b does not commute with a") {
    auto l = lattices::o6();
    const auto a = at(l, "a"), b = at(l, "b");
    CHECK(qcommutes(l, a, b));
    CHECK(qcommutes(l, b, a));
    CHECK_FALSE(commutes(l, b, a));
    CHECK(commutes(l, a, b));
  }

  TEST_CASE("commutes and q-commutes coincide on orthomodular lattices") {
    for (const auto& l : {lattices::mo(2), lattices::mo(3), lattices::boolean(3)})
      for (std::size_t p = 0; p < l.size(); ++p)
        for (std::size_t q = 0; q < l.size(); ++q) CHECK(commutes(l, p, q) == qcommutes(l, p, q));
  }

  TEST_CASE("atoms and atomisticity") {
    CHECK(lattices::mo(3).atoms().size() == 6);
    CHECK(is_atomistic(lattices::mo(3)).atomistic);
    auto o6 = is_atomistic(lattices::o6());
    CHECK(o6.atomic);
    CHECK_FALSE(o6.atomistic);
  }

  TEST_CASE("centre and distributivity") {
    CHECK(qcentral_elements(lattices::mo(2)).size() == 2);
    CHECK(qcentral_elements(lattices::boolean(3)).size() == 8);
    CHECK(is_distributive(lattices::boolean(4)));
    CHECK_FALSE(is_distributive(lattices::mo(2)));
    CHECK(distributivity_witness(lattices::mo(2)));
  }

  TEST_CASE("generated subortholattice") {
    auto l = lattices::mo(3);
    auto sub = generated_subortholattice(l, {at(l, "a")});
    CHECK(sub.lattice.size() == 4);
    CHECK(is_distributive(sub.lattice));
    auto two = generated_subortholattice(l, {at(l, "a"), at(l, "b")});
    CHECK(two.lattice.size() == 6);
  }

  TEST_CASE("ortho isomorphisms") {
    auto l = lattices::mo(2);
    std::vector<std::size_t> id(l.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    CHECK(is_ortho_isomorphism(l, l, id));
    std::swap(id[at(l, "a")], id[at(l, "b")]);
    std::swap(id[at(l, "a'")], id[at(l, "b'")]);
    CHECK(is_ortho_isomorphism(l, l, id));
    std::swap(id[at(l, "a")], id[at(l, "b'")]);
    CHECK_FALSE(is_ortho_isomorphism(l, l, id));
  }

  TEST_CASE("covers of B2 form a square") { CHECK(lattices::boolean(2).covers().size() == 4); }
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "qsets/element_set.hpp"

using qsets::ElementSet;

TEST_SUITE("element_set") {
  TEST_CASE("bit-string round trip, index 0 first") {
    auto s = ElementSet::from_string("0101");
    CHECK(s.width() == 4);
    CHECK(s.members() == std::vector<std::size_t>{1, 3});
    CHECK(s.to_string() == "0101");
    CHECK_THROWS(ElementSet::from_string("01x"));
  }

  TEST_CASE("set algebra across word boundaries") {
    ElementSet a(130, {0, 63, 64, 129});
    ElementSet b(130, {63, 100});
    CHECK((a & b).members() == std::vector<std::size_t>{63});
    CHECK((a | b).count() == 5);
    CHECK((a - b).members() == std::vector<std::size_t>{0, 64, 129});
    CHECK(a.complement().count() == 126);
    CHECK(ElementSet::full(130).is_full());
    CHECK(ElementSet::full(130).complement().empty());
    CHECK(a.first() == 0);
    CHECK(a.next(0) == 63);
    CHECK(a.next(64) == 129);
    CHECK(a.intersects(b));
    CHECK_FALSE((a - b).intersects(b));
    CHECK(ElementSet(130, {63}).is_subset_of(a));
  }

  TEST_CASE("order is lectic") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 1 + rng() % 9;
      auto a = oracle::from_mask(n, rng());
      auto b = oracle::from_mask(n, rng());
      CHECK((oracle::to_set(a) < oracle::to_set(b)) == oracle::lectic_less(a, b));
    }
  }

  TEST_CASE("prefix keeps indices below i") {
    ElementSet a(6, {0, 2, 5});
    CHECK(a.prefix(3).members() == std::vector<std::size_t>{0, 2});
    CHECK(a.prefix(0).empty());
  }

  TEST_CASE("equal sets hash equally") {
    ElementSet a(70, {3, 69});
    ElementSet b(70, {69});
    b |= ElementSet(70, {3});
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
  }
}

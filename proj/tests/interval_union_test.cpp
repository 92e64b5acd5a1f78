#include <doctest.h>

#include <random>

#include "qsets/error.hpp"
#include "qsets/interval_union.hpp"

using namespace qsets;

namespace {

const Rational kQuarter(1, 4);

IntervalUnion random_union(std::mt19937_64& rng, const Rational& delta = Rational(1)) {
  std::vector<Interval> ivs;
  const auto k = rng() % 4;
  for (std::size_t i = 0; i < k; ++i) {
    const int lo = static_cast<int>(rng() % 25) - 12;
    const int len = static_cast<int>(rng() % 6);
    ivs.push_back({Rational(lo) * kQuarter, Rational(lo + len) * kQuarter});
  }
  return IntervalUnion(delta, ivs);
}

// Grid sample of a set on [-lim, lim] with step 1/4.
std::vector<Rational> grid(int lim) {
  std::vector<Rational> g;
  for (int k = -4 * lim; k <= 4 * lim; ++k) g.push_back(Rational(k) * kQuarter);
  return g;
}

// Sampled complement: y survives when no sampled member is closer than δ.
// Exact on the grid when δ and all endpoints are grid multiples.
std::vector<bool> sampled_qcomp(const std::vector<bool>& member, const std::vector<Rational>& g, const Rational& delta) {
  std::vector<bool> out(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (member[j] && abs(g[i] - g[j]) < delta) out[i] = false;
  return out;
}

}  // namespace

TEST_SUITE("interval_union") {
  TEST_CASE("normalization merges touching intervals") {
    IntervalUnion u(Rational(1), {{2, 3}, {0, 1}, {1, Rational(3, 2)}});
    REQUIRE(u.intervals().size() == 2);
    CHECK(u.intervals()[0] == Interval{0, Rational(3, 2)});
    CHECK_THROWS_AS(IntervalUnion(Rational(0), {}), InputError);
    CHECK_THROWS_AS(IntervalUnion(Rational(1), {{2, 1}}), InputError);
    CHECK_THROWS_AS(IntervalUnion(Rational(1), {{Endpoint::pos_inf(), Endpoint::pos_inf()}}), InputError);
  }

  TEST_CASE("worked values") {
    const Rational one(1);
    auto s = IntervalUnion(one, {{0, Rational(1, 2)}});
    CHECK(to_string(qcomp_interval(s)) == "(-inf, -1] ∪ [3/2, inf)");
    CHECK(qcomp_interval(IntervalUnion::empty(one)).is_real_line());
    CHECK(qcomp_interval(IntervalUnion::real_line(one)).is_empty());
    auto pts = IntervalUnion::points(one, {Rational(0), Rational(2)});
    CHECK(to_string(qcomp_interval(pts)) == "(-inf, -1] ∪ {1} ∪ [3, inf)");
    CHECK(closure_interval(IntervalUnion::points(one, {Rational(0), Rational(3, 2)})) ==
          IntervalUnion(one, {{0, Rational(3, 2)}}));
  }

  TEST_CASE("non-hereditary witness T=[0,1], S=[0,1/2]") {
    const Rational one(1);
    auto t = IntervalUnion(one, {{0, 1}});
    auto s = IntervalUnion(one, {{0, Rational(1, 2)}});
    CHECK(qcomp_interval(s).intersect(t).is_empty());
    CHECK(relative_closure_interval(t, s) == t);
    CHECK(closure_interval(s) == s);
    CHECK_THROWS_AS(relative_closure_interval(s, t), PreconditionError);
  }

  TEST_CASE("complement agrees with the grid oracle") {
    std::mt19937_64 rng(21);
    const auto g = grid(8);
    for (int k = 0; k < 60; ++k) {
      auto s = random_union(rng);
      std::vector<bool> member(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) member[i] = s.contains(g[i]);
      auto expected = sampled_qcomp(member, g, s.delta());
      auto got = qcomp_interval(s);
      for (std::size_t i = 0; i < g.size(); ++i) CHECK(got.contains(g[i]) == expected[i]);
      // Closure, checked away from the window edge.
      std::vector<bool> comp(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) comp[i] = got.contains(g[i]);
      auto expected_cl = sampled_qcomp(comp, g, s.delta());
      auto cl = closure_interval(s);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (abs(g[i]) <= 4) CHECK(cl.contains(g[i]) == expected_cl[i]);
    }
  }

  TEST_CASE("Galois laws") {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 200; ++k) {
      auto a = random_union(rng);
      auto b = a.unite(random_union(rng));
      CHECK(qcomp_interval(b).is_subset_of(qcomp_interval(a)));
      CHECK(a.is_subset_of(closure_interval(a)));
      CHECK(qcomp_interval(closure_interval(a)) == qcomp_interval(a));
      CHECK(closure_interval(closure_interval(a)) == closure_interval(a));
      auto c = random_union(rng);
      CHECK(a.is_subset_of(qcomp_interval(c)) == c.is_subset_of(qcomp_interval(a)));
      CHECK(is_Q1(closure_interval(a)));
    }
  }

  TEST_CASE("De Morgan for unions") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 200; ++k) {
      auto a = random_union(rng);
      auto b = random_union(rng);
      CHECK(qcomp_interval(a.unite(b)) == qcomp_interval(a).intersect(qcomp_interval(b)));
    }
  }

  TEST_CASE("scaling commutes with the complement") {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 100; ++k) {
      auto a = random_union(rng);
      const Rational c(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 5));
      CHECK(qcomp_interval(a.scaled(c)) == qcomp_interval(a).scaled(c));
      CHECK(closure_interval(a.scaled(c)) == closure_interval(a).scaled(c));
    }
  }

  TEST_CASE("different scales do not mix") {
    CHECK_THROWS_AS(IntervalUnion::empty(Rational(1)).intersect(IntervalUnion::empty(Rational(2))), InputError);
  }
}

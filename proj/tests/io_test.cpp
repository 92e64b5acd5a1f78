#include <doctest.h>

#include <random>
#include <sstream>

#include "qsets/error.hpp"
#include "qsets/hasse.hpp"
#include "qsets/io.hpp"
#include "qsets/lattice_corpus.hpp"

using namespace qsets;
using io::InputKind;
using io::Json;

namespace {

template <typename T>
T parse_as(const std::string& text, InputKind kind) {
  std::istringstream in(text);
  return std::get<T>(io::parse_input(in, kind));
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("quantum set parsing") {
    auto x = parse_as<QuantumSet>(R"({"elements":["a","a'","b","b'"],"q_distinct":[["a","a'"],["b","b'"]]})",
                                  InputKind::QuantumSet);
    CHECK(x.size() == 4);
    CHECK(x.edge_count() == 2);
    CHECK(parse_as<QuantumSet>(R"({"elements":[],"q_distinct":[]})", InputKind::QuantumSet).size() == 0);
    CHECK_THROWS_WITH_AS(parse_as<QuantumSet>(R"({"elements":["a"],"q_distinct":[["a","a"]]})", InputKind::QuantumSet),
                         doctest::Contains("self-pair"), InputError);
    CHECK_THROWS_WITH_AS(parse_as<QuantumSet>(R"({"elements":["a"],)", InputKind::QuantumSet),
                         doctest::Contains("malformed JSON"), InputError);
    CHECK_THROWS_WITH_AS(parse_as<QuantumSet>(R"({"elements":"a"})", InputKind::QuantumSet),
                         doctest::Contains("elements"), InputError);
    CHECK_THROWS_AS(io::parse_kind("banana"), InputError);
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 50; ++k) {
      auto x = quantum_sets::from_edge_mask(1 + rng() % 6, rng());
      CHECK(std::get<QuantumSet>(io::parse_json(io::to_json(x), InputKind::QuantumSet)) == x);
    }
    for (const auto& [name, l] : lattices::standard_corpus()) {
      auto back = std::get<OrthoLattice>(io::parse_json(io::to_json(l), InputKind::OrthoLattice));
      CHECK(back.raw().leq == l.raw().leq);
      CHECK(back.raw().ortho == l.raw().ortho);
      CHECK(back.labels() == l.labels());
    }
    IntervalUnion u(Rational(1, 3), {{Endpoint::neg_inf(), Rational(-7, 2)}, {0, 2}, {5, Endpoint::pos_inf()}});
    CHECK(std::get<IntervalUnion>(io::parse_json(io::to_json(u), InputKind::IntervalUnion)) == u);
    for (const auto& a : {ArcSet::empty(), ArcSet::full(), ArcSet::arc(Rational(11, 4), Rational(3, 4))})
      CHECK(std::get<ArcSet>(io::parse_json(io::to_json(a), InputKind::Arc)) == a);
    std::mt19937_64 trng(42);
    auto t = random_topology(4, trng);
    CHECK(std::get<FiniteTopology>(io::parse_json(io::to_json(t), InputKind::Topology)) == t);
    auto g = classical_gelfand(2);
    auto qt = std::get<QuantumTopology>(io::parse_json(io::to_json(g), InputKind::QuantumTopology));
    CHECK(qt.closed_sets() == g.closed_sets());
  }

  TEST_CASE("rationals") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-2)) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK(Endpoint::parse("-inf") == Endpoint::neg_inf());
  }

  TEST_CASE("interval input errors name the field") {
    CHECK_THROWS_WITH_AS(parse_as<IntervalUnion>(R"({"delta":"0","intervals":[]})", InputKind::IntervalUnion),
                         doctest::Contains("delta"), InputError);
    CHECK_THROWS_AS(parse_as<ArcSet>(R"({"kind":"arc","start":"0","length":"2"})", InputKind::Arc), InputError);
  }

  TEST_CASE("Hasse diagrams") {
    auto b2 = export_hasse(lattices::boolean(2));
    CHECK(count(b2, "[label=") == 4);
    CHECK(count(b2, " -> ") == 4);
    CHECK(b2.rfind("digraph hasse {", 0) == 0);

    auto q4 = export_hasse(enumerate_qsubsets(quantum_sets::cycle(4)));
    CHECK(count(q4, "[label=") == 4);
    CHECK(count(q4, " -> ") == 4);
    CHECK(q4.find("{1,3}") != std::string::npos);

    auto o6 = export_hasse(lattices::o6());
    CHECK(count(o6, "[label=") == 6);
    CHECK(count(o6, " -> ") == 6);
    CHECK(o6 == export_hasse(lattices::o6()));
  }

  TEST_CASE("lattice report") {
    auto r = io::lattice_report(enumerate_qsubsets(quantum_sets::cycle(5)));
    CHECK(r["properties"]["atomic"] == true);
    CHECK(r["properties"]["hereditary"] == false);
    CHECK(r["atoms"].size() == 5);
  }
}

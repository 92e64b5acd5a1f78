#include "qsets/topology.hpp"

#include <algorithm>
#include <unordered_set>

#include "qsets/error.hpp"

namespace qsets {

namespace {

using SetOfSets = std::unordered_set<ElementSet, ElementSetHash>;

void sort_unique(std::vector<ElementSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Closes a family under pairwise ∪ and ∩.
std::vector<ElementSet> lattice_closure(std::vector<ElementSet> family) {
  SetOfSets seen(family.begin(), family.end());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (auto s : {family[i] | family[j], family[i] & family[j]})
        if (seen.insert(s).second) family.push_back(std::move(s));
  return family;
}

}  // namespace

bool FiniteTopology::is_topology(std::size_t n, const std::vector<ElementSet>& opens) {
  SetOfSets set(opens.begin(), opens.end());
  for (const auto& o : opens)
    if (o.width() != n) return false;
  if (!set.contains(ElementSet(n)) || !set.contains(ElementSet::full(n))) return false;
  for (const auto& a : opens)
    for (const auto& b : opens)
      if (!set.contains(a | b) || !set.contains(a & b)) return false;
  return true;
}

FiniteTopology::FiniteTopology(std::vector<std::string> points, std::vector<ElementSet> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  for (const auto& o : opens_)
    if (o.width() != points_.size()) throw InputError("open set width does not match the number of points");
  sort_unique(opens_);
  if (!is_topology(points_.size(), opens_))
    throw InputError("open sets must contain ∅ and the whole space and be closed under ∪ and ∩");
}

bool FiniteTopology::is_open(const ElementSet& s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

ElementSet FiniteTopology::interior(const ElementSet& s) const {
  ElementSet acc(size());
  for (const auto& o : opens_)
    if (o.is_subset_of(s)) acc |= o;
  return acc;
}

ElementSet FiniteTopology::closure(const ElementSet& s) const { return interior(s.complement()).complement(); }

std::vector<FiniteTopology> all_topologies(std::size_t n) {
  if (n > 4) throw InputError("exhaustive topology enumeration supports n ≤ 4");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<ElementSet> universe;
  for (std::size_t m = 0; m < subsets; ++m) {
    ElementSet s(n);
    for (std::size_t b = 0; b < n; ++b)
      if ((m >> b) & 1U) s.set(b);
    universe.push_back(std::move(s));
  }
  const std::uint64_t required = 1U | (std::uint64_t{1} << (subsets - 1));
  std::vector<FiniteTopology> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    if ((family & required) != required) continue;
    std::vector<ElementSet> opens;
    for (std::size_t m = 0; m < subsets; ++m)
      if ((family >> m) & 1U) opens.push_back(universe[m]);
    if (FiniteTopology::is_topology(n, opens)) out.emplace_back(numbered_labels(n), std::move(opens));
  }
  return out;
}

FiniteTopology random_topology(std::size_t n, std::mt19937_64& rng) {
  if (n > 63) throw InputError("random topology supports n ≤ 63");
  std::vector<ElementSet> family{ElementSet(n), ElementSet::full(n)};
  const std::size_t generators = 1 + rng() % (n + 1);
  for (std::size_t k = 0; k < generators; ++k) {
    auto bits = rng();
    ElementSet s(n);
    for (std::size_t b = 0; b < n; ++b)
      if ((bits >> b) & 1U) s.set(b);
    family.push_back(std::move(s));
  }
  return FiniteTopology(numbered_labels(n), lattice_closure(std::move(family)));
}

RegularOpenAlgebra regular_open_lattice(const FiniteTopology& t) {
  RegularOpenAlgebra out;
  for (const auto& u : t.opens())
    if (t.interior(t.closure(u)) == u) out.sets.push_back(u);
  const auto n = out.sets.size();
  auto find = [&](const ElementSet& s) {
    auto it = std::lower_bound(out.sets.begin(), out.sets.end(), s);
    if (it == out.sets.end() || *it != s) throw std::logic_error("regular-open complement is not regular open");
    return static_cast<std::size_t>(it - out.sets.begin());
  };
  RawOrthoPoset raw;
  raw.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    raw.labels.push_back(out.sets[i].to_string());
    for (std::size_t j = 0; j < n; ++j) raw.leq[i][j] = out.sets[i].is_subset_of(out.sets[j]);
    raw.ortho.push_back(find(t.closure(out.sets[i]).complement()));
  }
  out.verdict = verify_ortholattice(raw);
  if (!out.verdict.ok()) return out;
  out.lattice = OrthoLattice::from_raw(std::move(raw));
  const auto& l = *out.lattice;
  out.orthomodular = is_orthomodular(l).orthomodular;
  out.distributive = is_distributive(l);
  out.join_matches_closure_formula = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.sets[l.join(i, j)] != t.interior(t.closure(out.sets[i]) | t.closure(out.sets[j])))
        out.join_matches_closure_formula = false;
  return out;
}

TopologyVerdict verify_quantum_topology(const OrthoLattice& carrier, const std::vector<std::size_t>& family) {
  std::vector<bool> in(carrier.size(), false);
  for (auto p : family) {
    if (p >= carrier.size()) throw InputError("family member " + std::to_string(p) + " is not a carrier element");
    in[p] = true;
  }
  if (!in[carrier.bottom()]) return {TopologyAxiom::S1, carrier.bottom(), carrier.bottom(), "0 is not in the family"};
  if (!in[carrier.top()]) return {TopologyAxiom::S1, carrier.top(), carrier.top(), "1 is not in the family"};
  auto all_meet = carrier.top();
  for (auto p : family) {
    all_meet = carrier.meet(all_meet, p);
    for (auto q : family)
      if (!in[carrier.meet(p, q)])
        return {TopologyAxiom::S2, p, q, "meet of " + carrier.label(p) + " and " + carrier.label(q) + " is missing"};
  }
  if (!in[all_meet]) return {TopologyAxiom::S2, all_meet, all_meet, "meet of the whole family is missing"};
  for (auto p : family)
    for (auto q : family)
      if (qcommutes(carrier, p, q) && !in[carrier.join(p, q)])
        return {TopologyAxiom::S3, p, q,
                "join of q-commuting " + carrier.label(p) + " and " + carrier.label(q) + " is missing"};
  return {};
}

std::vector<std::size_t> generate_topology(const OrthoLattice& carrier, const std::vector<std::size_t>& generators) {
  std::vector<bool> in(carrier.size(), false);
  std::vector<std::size_t> members;
  auto add = [&](std::size_t p) {
    if (p >= carrier.size()) throw InputError("generator " + std::to_string(p) + " is not a carrier element");
    if (!in[p]) {
      in[p] = true;
      members.push_back(p);
    }
  };
  add(carrier.bottom());
  add(carrier.top());
  for (auto g : generators) add(g);
  for (std::size_t done = 0; done < members.size(); ++done) {
    auto p = members[done];
    for (std::size_t k = 0; k <= done; ++k) {
      auto q = members[k];
      add(carrier.meet(p, q));
      if (qcommutes(carrier, p, q)) add(carrier.join(p, q));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> carrier_indices(const QSubsetLattice& carrier, const std::vector<ElementSet>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) {
    auto i = carrier.find(s);
    if (!i) throw InputError("family member " + s.to_string() + " is not a q-subset of the carrier");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuantumTopology::QuantumTopology(QSubsetLattice carrier, const std::vector<ElementSet>& family)
    : carrier_(std::move(carrier)), family_(carrier_indices(carrier_, family)) {
  if (auto v = verify_quantum_topology(carrier_.lattice(), family_); !v.ok())
    throw InputError("not a quantum topology: " + v.message);
}

std::vector<ElementSet> QuantumTopology::closed_sets() const {
  std::vector<ElementSet> out;
  for (auto i : family_) out.push_back(carrier_[i]);
  return out;
}

QuantumTopology generate_topology(const QSubsetLattice& carrier, const std::vector<ElementSet>& generators) {
  auto family = generate_topology(carrier.lattice(), carrier_indices(carrier, generators));
  std::vector<ElementSet> sets;
  for (auto i : family) sets.push_back(carrier[i]);
  return QuantumTopology(carrier, sets);
}

bool is_strict_quantum_homeomorphism(const ElementMap& m, const QuantumTopology& from, const QuantumTopology& to) {
  if (!(m.domain == from.carrier().parent()) || !(m.codomain == to.carrier().parent()))
    throw InputError("map does not run between the carriers' quantum sets");
  if (!is_strict_quantum_bijection(m)) throw PreconditionError("map is not a strict quantum bijection");
  std::vector<ElementSet> image;
  for (const auto& c : from.closed_sets()) image.push_back(m.apply(c));
  sort_unique(image);
  return image == to.closed_sets();
}

QuantumTopology classical_gelfand(std::size_t n) {
  auto carrier = enumerate_qsubsets(quantum_sets::classical(n));
  auto all = carrier.closed_sets();
  return QuantumTopology(std::move(carrier), all);
}

}  // namespace qsets

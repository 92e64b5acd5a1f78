#include "qsets/quantum_set.hpp"

#include <algorithm>
#include <unordered_map>

#include "qsets/error.hpp"

namespace qsets {

namespace {

void require_width(const QuantumSet& x, const ElementSet& d) {
  if (d.width() != x.size()) {
    throw InputError("element set of width " + std::to_string(d.width()) +
                     " used with a quantum set of " + std::to_string(x.size()) + " elements");
  }
}

}  // namespace

QuantumSet QuantumSet::from_index_pairs(std::vector<std::string> labels,
                                        const std::vector<IndexPair>& q_distinct) {
  std::vector<LabelPair> pairs;
  pairs.reserve(q_distinct.size());
  for (auto [i, j] : q_distinct) {
    if (i >= labels.size() || j >= labels.size())
      throw InputError("q-distinct pair refers to index outside the ground set");
    pairs.emplace_back(labels[i], labels[j]);
  }
  return QuantumSet(std::move(labels), pairs);
}

QuantumSet::QuantumSet(std::vector<std::string> labels, const std::vector<LabelPair>& q_distinct)
    : labels_(std::move(labels)) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index.emplace(labels_[i], i).second)
      throw InputError("duplicate element label \"" + labels_[i] + "\"");
  }
  rows_.assign(labels_.size(), ElementSet(labels_.size()));
  for (const auto& [a, b] : q_distinct) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("q_distinct refers to unknown element \"" + a + "\"");
    if (ib == index.end()) throw InputError("q_distinct refers to unknown element \"" + b + "\"");
    if (ia->second == ib->second)
      throw InputError("self-pair [\"" + a + "\",\"" + a + "\"] violates irreflexivity");
    rows_[ia->second].set(ib->second);
    rows_[ib->second].set(ia->second);
  }
}

std::optional<std::size_t> QuantumSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t QuantumSet::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c / 2;
}

std::vector<QuantumSet::IndexPair> QuantumSet::edges() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j = rows_[i].next(i); j < size(); j = rows_[i].next(j)) out.emplace_back(i, j);
  return out;
}

bool QuantumSet::is_classical() const {
  return edge_count() * 2 == size() * (size() == 0 ? 0 : size() - 1);
}

ElementSet QuantumSet::subset(const std::vector<std::string>& members) const {
  ElementSet s(size());
  for (const auto& m : members) {
    auto i = index_of(m);
    if (!i) throw InputError("unknown element \"" + m + "\"");
    s.set(*i);
  }
  return s;
}

std::string describe(const QuantumSet& x, const ElementSet& s) {
  require_width(x, s);
  std::string out = "{";
  for (auto i = s.first(); i < s.width(); i = s.next(i)) out += (out.size() > 1 ? "," : "") + x.label(i);
  return out + "}";
}

std::vector<std::string> numbered_labels(std::size_t n, std::size_t first) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(first + i));
  return out;
}

namespace quantum_sets {

QuantumSet classical(std::size_t n) {
  std::vector<QuantumSet::IndexPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return QuantumSet::from_index_pairs(numbered_labels(n), pairs);
}

QuantumSet discrete(std::size_t n) { return QuantumSet::from_index_pairs(numbered_labels(n), {}); }

QuantumSet cycle(std::size_t n) {
  std::vector<QuantumSet::IndexPair> pairs;
  if (n >= 3)
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  else if (n == 2)
    pairs.emplace_back(0, 1);
  return QuantumSet::from_index_pairs(numbered_labels(n), pairs);
}

QuantumSet path(std::size_t n) {
  std::vector<QuantumSet::IndexPair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return QuantumSet::from_index_pairs(numbered_labels(n), pairs);
}

QuantumSet from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::vector<QuantumSet::IndexPair> pairs;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (k < 64 && ((mask >> k) & 1U)) pairs.emplace_back(i, j);
  return QuantumSet::from_index_pairs(numbered_labels(n), pairs);
}

QuantumSet mo2_graph() {
  return QuantumSet({"a", "a'", "b", "b'"}, {{"a", "a'"}, {"b", "b'"}});
}

QuantumSet orthogonal_sum(const QuantumSet& x, const QuantumSet& y) {
  std::vector<std::string> labels = x.labels();
  bool collide = false;
  for (const auto& l : y.labels())
    if (x.index_of(l)) collide = true;
  if (collide) {
    for (auto& l : labels) l += "#1";
    for (const auto& l : y.labels()) labels.push_back(l + "#2");
  } else {
    labels.insert(labels.end(), y.labels().begin(), y.labels().end());
  }
  auto pairs = x.edges();
  for (auto [i, j] : y.edges()) pairs.emplace_back(i + x.size(), j + x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) pairs.emplace_back(i, x.size() + j);
  return QuantumSet::from_index_pairs(std::move(labels), pairs);
}

}  // namespace quantum_sets

bool ElementMap::is_bijection() const {
  if (images.size() != domain.size() || domain.size() != codomain.size()) return false;
  std::vector<bool> hit(codomain.size(), false);
  for (auto i : images) {
    if (i >= codomain.size() || hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

ElementSet ElementMap::apply(const ElementSet& d) const {
  require_width(domain, d);
  ElementSet out(codomain.size());
  for (auto i = d.first(); i < d.width(); i = d.next(i)) out.set(images.at(i));
  return out;
}

ElementSet qcomplement(const QuantumSet& x, const ElementSet& d) {
  require_width(x, d);
  auto out = x.full_set();
  for (auto i = d.first(); i < d.width() && !out.empty(); i = d.next(i)) out &= x.row(i);
  return out;
}

ElementSet closure(const QuantumSet& x, const ElementSet& d) {
  return qcomplement(x, qcomplement(x, d));
}

bool is_qsubset(const QuantumSet& x, const ElementSet& d) { return closure(x, d) == d; }

ElementSet qunion(const QuantumSet& x, const ElementSet& s, const ElementSet& t) {
  if (!is_qsubset(x, s)) throw PreconditionError("qunion: left operand " + s.to_string() + " is not a q-subset");
  if (!is_qsubset(x, t)) throw PreconditionError("qunion: right operand " + t.to_string() + " is not a q-subset");
  return closure(x, s | t);
}

ElementSet relative_closure(const QuantumSet& x, const ElementSet& c, const ElementSet& d) {
  require_width(x, c);
  require_width(x, d);
  if (!d.is_subset_of(c))
    throw PreconditionError("relative_closure: " + d.to_string() + " is not contained in " + c.to_string());
  return qcomplement(x, qcomplement(x, d) & c) & c;
}

bool subsets_qcommute(const QuantumSet& x, const ElementSet& c, const ElementSet& d) {
  auto meet_perp = qcomplement(x, c & d);
  return (c & meet_perp).is_subset_of(qcomplement(x, d & meet_perp));
}

QuantumSet induced(const QuantumSet& x, const ElementSet& c) {
  require_width(x, c);
  auto members = c.members();
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (auto i : members) labels.push_back(x.label(i));
  std::vector<QuantumSet::IndexPair> pairs;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (x.q_distinct(members[a], members[b])) pairs.emplace_back(a, b);
  return QuantumSet::from_index_pairs(std::move(labels), pairs);
}

bool is_strict_quantum_bijection(const ElementMap& m) {
  if (!m.is_bijection()) throw PreconditionError("map is not a bijection between the two quantum sets");
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    if (m.apply(m.domain.row(i)) != m.codomain.row(m.images[i])) return false;
  }
  return true;
}

}  // namespace qsets

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsets/element_set.hpp"

namespace qsets {

/// A finite set with a symmetric, irreflexive q-distinctness relation
/// (equivalently a loop-free undirected graph). Immutable after construction.
class QuantumSet {
 public:
  using LabelPair = std::pair<std::string, std::string>;
  using IndexPair = std::pair<std::size_t, std::size_t>;

  QuantumSet() = default;

  /// Pairs are unordered and symmetrized; duplicates are tolerated.
  /// Throws InputError on duplicate labels, unknown labels or a self-pair.
  QuantumSet(std::vector<std::string> labels, const std::vector<LabelPair>& q_distinct);

  static QuantumSet from_index_pairs(std::vector<std::string> labels,
                                     const std::vector<IndexPair>& q_distinct);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool q_distinct(std::size_t i, std::size_t j) const { return rows_.at(i).test(j); }
  /// {x : x ≠_q x_i}
  const ElementSet& row(std::size_t i) const { return rows_.at(i); }

  std::size_t edge_count() const;
  std::vector<IndexPair> edges() const;
  bool is_classical() const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }
  /// Builds a member set from labels; throws InputError on unknown labels.
  ElementSet subset(const std::vector<std::string>& members) const;

  friend bool operator==(const QuantumSet&, const QuantumSet&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> rows_;
};

/// "{1,3}"-style rendering of a subset by element labels.
std::string describe(const QuantumSet& x, const ElementSet& s);

/// Labels "1".."n".
std::vector<std::string> numbered_labels(std::size_t n, std::size_t first = 1);

namespace quantum_sets {

/// x ≠_q y for every x ≠ y.
QuantumSet classical(std::size_t n);
/// Empty relation.
QuantumSet discrete(std::size_t n);
QuantumSet cycle(std::size_t n);
QuantumSet path(std::size_t n);
/// Bit k of mask selects the k-th pair in the order (0,1),(0,2),...,(0,n-1),(1,2),...
QuantumSet from_edge_mask(std::size_t n, std::uint64_t mask);
/// Two orthogonal pairs {a,a'}, {b,b'}; its q-subsets form MO2.
QuantumSet mo2_graph();
/// Disjoint union in which every cross pair is q-distinct. Labels are kept
/// when they do not collide, otherwise suffixed with "#1"/"#2".
QuantumSet orthogonal_sum(const QuantumSet& x, const QuantumSet& y);

}  // namespace quantum_sets

/// A total assignment of domain indices to codomain indices.
struct ElementMap {
  QuantumSet domain;
  QuantumSet codomain;
  std::vector<std::size_t> images;

  bool is_bijection() const;
  /// Image of a domain subset.
  ElementSet apply(const ElementSet& d) const;
};

// Pointwise operations on P(X). All throw InputError on a width mismatch.

ElementSet qcomplement(const QuantumSet& x, const ElementSet& d);
ElementSet closure(const QuantumSet& x, const ElementSet& d);
bool is_qsubset(const QuantumSet& x, const ElementSet& d);
/// Closure of S ∪ T; throws PreconditionError if S or T is not a q-subset.
ElementSet qunion(const QuantumSet& x, const ElementSet& s, const ElementSet& t);
/// (D^⊥ ∩ C)^⊥ ∩ C, the closure of D inside the quantum set induced on C.
/// Throws PreconditionError unless D ⊆ C.
ElementSet relative_closure(const QuantumSet& x, const ElementSet& c, const ElementSet& d);
/// C ∩ (C∩D)^⊥ ⊆ (D ∩ (C∩D)^⊥)^⊥
bool subsets_qcommute(const QuantumSet& x, const ElementSet& c, const ElementSet& d);
/// Restriction of the relation to C, relabelled 0..|C|-1 in inherited order.
QuantumSet induced(const QuantumSet& x, const ElementSet& c);

/// Throws PreconditionError if m is not a bijection between equal-size sets.
bool is_strict_quantum_bijection(const ElementMap& m);

}  // namespace qsets

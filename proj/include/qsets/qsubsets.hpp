#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsets/element_set.hpp"
#include "qsets/ortholattice.hpp"
#include "qsets/quantum_set.hpp"

namespace qsets {

inline constexpr std::size_t kDefaultEnumerationLimit = std::size_t{1} << 20;
/// Largest Q(X) for which the ortholattice tables are materialized.
inline constexpr std::size_t kMaterializeLimit = 2048;

/// Q(X): all q-subsets of a finite quantum set in lectic order, with the
/// ortholattice (∩, q-union, q-complement) built over them.
class QSubsetLattice {
 public:
  QSubsetLattice(QuantumSet parent, std::vector<ElementSet> closed_sets);

  const QuantumSet& parent() const noexcept { return parent_; }
  const std::vector<ElementSet>& closed_sets() const noexcept { return closed_; }
  std::size_t size() const noexcept { return closed_.size(); }
  const ElementSet& operator[](std::size_t i) const { return closed_.at(i); }

  /// Position of a closed set, or nullopt if s is not a q-subset.
  std::optional<std::size_t> find(const ElementSet& s) const;
  std::size_t index_of(const ElementSet& s) const;

  /// Throws ResourceError if size() exceeds kMaterializeLimit.
  const OrthoLattice& lattice() const;

 private:
  OrthoLattice build_lattice() const;

  QuantumSet parent_;
  std::vector<ElementSet> closed_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  struct LatticeCache {
    std::once_flag once;
    std::optional<OrthoLattice> lattice;
  };
  std::shared_ptr<LatticeCache> cache_ = std::make_shared<LatticeCache>();
};

/// Lectic-order closure enumeration (NextClosure) of the fixed points of
/// D ↦ D^⊥⊥. Throws ResourceError once more than `limit` sets are produced.
std::vector<ElementSet> next_closure_enumeration(const QuantumSet& x, std::size_t limit = kDefaultEnumerationLimit);

QSubsetLattice enumerate_qsubsets(const QuantumSet& x, std::size_t limit = kDefaultEnumerationLimit);

/// Every singleton is a q-subset.
bool is_atomic(const QuantumSet& x);

/// For every T ∈ Q(X) and S ∈ Q(X) with S ⊆ T, S is closed relative to T.
bool is_hereditary(const QSubsetLattice& q);
bool is_hereditary(const QuantumSet& x, std::size_t limit = kDefaultEnumerationLimit);

/// (S, T) with S ⊊ T, T ∩ S^⊥ = ∅, or nothing when X is hereditary.
std::optional<std::pair<ElementSet, ElementSet>> hereditary_witness(const QSubsetLattice& q);
std::optional<std::pair<ElementSet, ElementSet>> hereditary_witness(const QuantumSet& x,
                                                                    std::size_t limit = kDefaultEnumerationLimit);

/// Members of Q(X) that q-commute with every member of Q(X), in lectic order.
std::vector<ElementSet> qcentral_elements(const QSubsetLattice& q);
std::vector<ElementSet> qcentral_elements(const QuantumSet& x, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace qsets

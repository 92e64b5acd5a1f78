#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qsets/element_set.hpp"
#include "qsets/ortholattice.hpp"
#include "qsets/qsubsets.hpp"
#include "qsets/quantum_set.hpp"

namespace qsets {

/// A topology on finitely many points, given by its open sets.
class FiniteTopology {
 public:
  /// Deduplicates and sorts opens lectically. Throws InputError unless the
  /// family contains ∅ and the full set and is closed under ∪ and ∩.
  FiniteTopology(std::vector<std::string> points, std::vector<ElementSet> opens);

  /// Whether `opens` (over n points) is the open-set family of a topology.
  static bool is_topology(std::size_t n, const std::vector<ElementSet>& opens);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<ElementSet>& opens() const noexcept { return opens_; }

  bool is_open(const ElementSet& s) const;
  /// Largest open subset.
  ElementSet interior(const ElementSet& s) const;
  /// Smallest closed superset.
  ElementSet closure(const ElementSet& s) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<ElementSet> opens_;
};

/// Every topology on n labelled points, by exhaustive family search (n ≤ 4).
std::vector<FiniteTopology> all_topologies(std::size_t n);
/// Topology generated by a few random subsets closed under ∪ and ∩.
FiniteTopology random_topology(std::size_t n, std::mt19937_64& rng);

struct RegularOpenAlgebra {
  /// Regular open sets (U = Int(cl U)) in lectic order.
  std::vector<ElementSet> sets;
  /// Ordered by inclusion with U′ = X ∖ cl U. Empty when the axioms fail.
  std::optional<OrthoLattice> lattice;
  OrthoVerdict verdict;
  bool orthomodular = false;
  bool distributive = false;
  /// Lattice join agrees with Int(cl U ∪ cl V) for every pair.
  bool join_matches_closure_formula = false;
};

RegularOpenAlgebra regular_open_lattice(const FiniteTopology& t);

enum class TopologyAxiom { None, S1, S2, S3 };

struct TopologyVerdict {
  TopologyAxiom violated = TopologyAxiom::None;
  std::size_t p = 0;
  std::size_t q = 0;
  std::string message;

  bool ok() const noexcept { return violated == TopologyAxiom::None; }
};

/// S1: 0, 1 ∈ C. S2: closed under meets (pairwise suffices on a finite
/// carrier; the meet of the whole family is checked too). S3: p ∨ q ∈ C for
/// q-commuting p, q ∈ C. Throws InputError for indices outside the carrier.
TopologyVerdict verify_quantum_topology(const OrthoLattice& carrier, const std::vector<std::size_t>& family);

/// Least family containing the generators that satisfies S1–S3 (sorted).
std::vector<std::size_t> generate_topology(const OrthoLattice& carrier, const std::vector<std::size_t>& generators);

/// A quantum topological space: a quantum set with a quantum topology on Q(X).
class QuantumTopology {
 public:
  /// Throws InputError when a member is not a q-subset or S1–S3 fail.
  QuantumTopology(QSubsetLattice carrier, const std::vector<ElementSet>& family);

  const QSubsetLattice& carrier() const noexcept { return carrier_; }
  /// Carrier indices, ascending (hence lectic).
  const std::vector<std::size_t>& family() const noexcept { return family_; }
  std::vector<ElementSet> closed_sets() const;

 private:
  QSubsetLattice carrier_;
  std::vector<std::size_t> family_;
};

/// Converts q-subsets to carrier indices; InputError for non-members.
std::vector<std::size_t> carrier_indices(const QSubsetLattice& carrier, const std::vector<ElementSet>& sets);

QuantumTopology generate_topology(const QSubsetLattice& carrier, const std::vector<ElementSet>& generators);

/// Whether m carries the family of `from` exactly onto that of `to`.
/// Throws PreconditionError when m is not a strict quantum bijection, and
/// InputError when m's domain/codomain differ from the carriers' quantum sets.
bool is_strict_quantum_homeomorphism(const ElementMap& m, const QuantumTopology& from, const QuantumTopology& to);

/// n points with the classical relation and every subset quantum closed:
/// the spectrum of the commutative algebra of functions on n points.
QuantumTopology classical_gelfand(std::size_t n);

}  // namespace qsets

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsets/ortholattice.hpp"
#include "qsets/qsubsets.hpp"
#include "qsets/quantum_set.hpp"

namespace qsets {

/// A quantum set whose ground elements are elements of a lattice.
struct LatticePoints {
  QuantumSet qset;
  /// lattice_index[i] is the lattice element behind ground element i.
  std::vector<std::size_t> lattice_index;
};

/// L★ = L ∖ {0} with p ≠_L q iff p ≤ q′.
LatticePoints star(const OrthoLattice& l);
/// (L^m, ≠_L): the atoms with the restricted relation.
LatticePoints atom_points(const OrthoLattice& l);

/// Result of checking a representation p ↦ {ground points below p}.
struct Representation {
  LatticePoints points;
  QSubsetLattice target;
  /// image[p] for every lattice element p.
  std::vector<ElementSet> image;
  bool closed = false;
  bool preserves_meet = false;
  bool preserves_join = false;
  bool preserves_ortho = false;
  bool order_embedding = false;
  bool injective = false;
  bool surjective = false;
  /// First failed check, empty on success.
  std::string failure;

  bool homomorphism() const { return closed && preserves_meet && preserves_join && preserves_ortho; }
  bool iso() const { return homomorphism() && order_embedding && injective && surjective; }
};

/// Ξ⁰: p ↦ {q ∈ L★ : q ≤ p} into Q(L★).
Representation xi0_completion(const OrthoLattice& l);
/// Ξ: p ↦ {a ∈ L^m : a ≤ p} into Q(L^m, ≠_L). Throws PreconditionError
/// unless l is atomistic.
Representation xi_atoms(const OrthoLattice& l);

/// For atomic X, the map x ↦ (the atom {x} of Q(X)) from X to the atom
/// quantum set of Q(X). Throws PreconditionError if X is not atomic.
ElementMap singleton_atom_map(const QSubsetLattice& q);

/// Whether S ↦ m(S) maps Q(X) onto Q(Y) commuting with ∩, ∨ and ^⊥.
/// Throws PreconditionError if m is not a bijection.
bool induces_ortho_isomorphism(const ElementMap& m, const QSubsetLattice& qx, const QSubsetLattice& qy);

}  // namespace qsets

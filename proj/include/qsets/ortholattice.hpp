#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsets/element_set.hpp"

namespace qsets {

/// An unverified finite poset with a candidate orthocomplementation.
struct RawOrthoPoset {
  std::vector<std::string> labels;
  /// leq[i][j] is true iff labels[i] ≤ labels[j].
  std::vector<std::vector<bool>> leq;
  std::vector<std::size_t> ortho;
};

/// Builds a raw poset from a cover relation (reflexive-transitive closure is
/// taken) and a complement map given by label. The complement map is
/// symmetrized; if neither bound is mapped, 0 and 1 are mapped to each other.
/// Throws InputError on unknown labels or elements left without a complement.
RawOrthoPoset raw_from_covers(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& covers,
                              const std::map<std::string, std::string>& ortho);

/// Axioms in the order verify_ortholattice checks them.
enum class OrthoAxiom {
  None,
  Shape,
  Reflexive,
  Antisymmetric,
  Transitive,
  Bounds,
  Meet,
  Join,
  Involution,
  Complement,  // p ∧ p′ = 0
  Antitone,
};

std::string_view axiom_name(OrthoAxiom a);

struct OrthoVerdict {
  OrthoAxiom violated = OrthoAxiom::None;
  std::size_t p = 0;
  std::size_t q = 0;
  std::string message;

  bool ok() const noexcept { return violated == OrthoAxiom::None; }
};

/// Checks the partial-order, lattice and orthocomplement axioms, stopping at
/// the first violation and naming a witness pair.
OrthoVerdict verify_ortholattice(const RawOrthoPoset& raw);

/// A verified finite ortholattice with materialized meet/join tables.
class OrthoLattice {
 public:
  using Element = std::size_t;

  OrthoLattice() = default;
  /// Throws InputError carrying the verdict message when verification fails.
  static OrthoLattice from_raw(RawOrthoPoset raw);

  std::size_t size() const noexcept { return raw_.labels.size(); }
  const std::string& label(Element p) const { return raw_.labels.at(p); }
  const std::vector<std::string>& labels() const noexcept { return raw_.labels; }
  std::optional<Element> index_of(std::string_view label) const;
  const RawOrthoPoset& raw() const noexcept { return raw_; }

  bool leq(Element p, Element q) const { return raw_.leq[p][q]; }
  Element ortho(Element p) const { return raw_.ortho.at(p); }
  Element meet(Element p, Element q) const { return meet_[p * size() + q]; }
  Element join(Element p, Element q) const { return join_[p * size() + q]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  /// {q : q ≤ p}
  const ElementSet& down_set(Element p) const { return down_.at(p); }

  /// Minimal non-zero elements, in index order.
  const std::vector<Element>& atoms() const noexcept { return atoms_; }
  /// Elements p < q with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

 private:
  RawOrthoPoset raw_;
  std::vector<ElementSet> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> atoms_;
  Element bottom_ = 0;
  Element top_ = 0;
};

struct OrthomodularVerdict {
  bool orthomodular = true;
  /// (p, q) with p ≤ q and q ≠ p ∨ (q ∧ p′).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

OrthomodularVerdict is_orthomodular(const OrthoLattice& l);

struct AtomisticVerdict {
  bool atomic = true;
  bool atomistic = true;
};

AtomisticVerdict is_atomistic(const OrthoLattice& l);

/// p = (p ∧ q) ∨ (p ∧ q′). Not symmetric in general.
bool commutes(const OrthoLattice& l, std::size_t p, std::size_t q);
/// p ∧ (p∧q)′ ≤ (q ∧ (p∧q)′)′. Always symmetric.
bool qcommutes(const OrthoLattice& l, std::size_t p, std::size_t q);

/// Elements that q-commute with every element.
std::vector<std::size_t> qcentral_elements(const OrthoLattice& l);

/// p ∧ (q ∨ r) = (p ∧ q) ∨ (p ∧ r) for all triples; returns a failing triple.
std::optional<std::array<std::size_t, 3>> distributivity_witness(const OrthoLattice& l);
inline bool is_distributive(const OrthoLattice& l) { return !distributivity_witness(l); }

/// A sub-ortholattice together with its embedding into the parent.
struct SubOrthoLattice {
  OrthoLattice lattice;
  /// embedding[i] is the parent index of lattice element i (ascending).
  std::vector<std::size_t> embedding;
};

/// Smallest subset containing the seeds, 0 and 1 closed under ∧, ∨ and ′.
SubOrthoLattice generated_subortholattice(const OrthoLattice& l, const std::vector<std::size_t>& seeds);

/// Verifies that map (indexed by elements of `from`) is an ortholattice
/// isomorphism onto `to`: bijective, order-preserving in both directions and
/// commuting with ′.
bool is_ortho_isomorphism(const OrthoLattice& from, const OrthoLattice& to,
                          const std::vector<std::size_t>& map);

}  // namespace qsets

#include "qsets/correspondence.hpp"

#include <unordered_set>

#include "qsets/error.hpp"

namespace qsets {

namespace {

LatticePoints points_from(const OrthoLattice& l, std::vector<std::size_t> ground) {
  std::vector<std::string> labels;
  std::vector<QuantumSet::IndexPair> pairs;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    labels.push_back(l.label(ground[i]));
    for (std::size_t j = i + 1; j < ground.size(); ++j)
      if (l.leq(ground[i], l.ortho(ground[j]))) pairs.emplace_back(i, j);
  }
  return {QuantumSet::from_index_pairs(std::move(labels), pairs), std::move(ground)};
}

Representation represent(const OrthoLattice& l, LatticePoints points) {
  auto target = enumerate_qsubsets(points.qset);
  Representation r{.points = std::move(points), .target = std::move(target), .image = {}, .failure = {}};
  const auto& x = r.points.qset;
  const auto n = l.size();
  for (std::size_t p = 0; p < n; ++p) {
    ElementSet s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (l.leq(r.points.lattice_index[i], p)) s.set(i);
    r.image.push_back(std::move(s));
  }

  auto first_failure = [&](const std::string& what) {
    if (r.failure.empty()) r.failure = what;
  };
  r.closed = true;
  for (std::size_t p = 0; p < n && r.closed; ++p)
    if (!r.target.find(r.image[p])) {
      r.closed = false;
      first_failure("image of " + l.label(p) + " is not a q-subset");
    }
  r.preserves_ortho = true;
  for (std::size_t p = 0; p < n && r.preserves_ortho; ++p)
    if (r.image[l.ortho(p)] != qcomplement(x, r.image[p])) {
      r.preserves_ortho = false;
      first_failure("complement of " + l.label(p) + " not preserved");
    }
  r.preserves_meet = r.preserves_join = r.order_embedding = true;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (r.preserves_meet && r.image[l.meet(p, q)] != (r.image[p] & r.image[q])) {
        r.preserves_meet = false;
        first_failure("meet of " + l.label(p) + ", " + l.label(q) + " not preserved");
      }
      if (r.preserves_join && r.image[l.join(p, q)] != closure(x, r.image[p] | r.image[q])) {
        r.preserves_join = false;
        first_failure("join of " + l.label(p) + ", " + l.label(q) + " not preserved");
      }
      if (r.order_embedding && l.leq(p, q) != r.image[p].is_subset_of(r.image[q])) {
        r.order_embedding = false;
        first_failure("order between " + l.label(p) + ", " + l.label(q) + " not reflected");
      }
    }
  std::unordered_set<ElementSet, ElementSetHash> distinct(r.image.begin(), r.image.end());
  r.injective = distinct.size() == n;
  if (!r.injective) first_failure("two elements share an image");
  r.surjective = r.closed && distinct.size() == r.target.size();
  if (!r.surjective) first_failure("image misses members of the target lattice");
  return r;
}

}  // namespace

LatticePoints star(const OrthoLattice& l) {
  std::vector<std::size_t> ground;
  for (std::size_t p = 0; p < l.size(); ++p)
    if (p != l.bottom()) ground.push_back(p);
  return points_from(l, std::move(ground));
}

LatticePoints atom_points(const OrthoLattice& l) { return points_from(l, l.atoms()); }

Representation xi0_completion(const OrthoLattice& l) { return represent(l, star(l)); }

Representation xi_atoms(const OrthoLattice& l) {
  if (!is_atomistic(l).atomistic) throw PreconditionError("lattice is not atomistic");
  return represent(l, atom_points(l));
}

ElementMap singleton_atom_map(const QSubsetLattice& q) {
  const auto& x = q.parent();
  if (!is_atomic(x)) throw PreconditionError("quantum set is not atomic");
  const auto& l = q.lattice();
  auto atoms = atom_points(l);
  std::vector<std::size_t> images(x.size(), 0);
  std::vector<bool> seen(x.size(), false);
  for (std::size_t k = 0; k < atoms.lattice_index.size(); ++k) {
    const auto& s = q[atoms.lattice_index[k]];
    if (s.count() != 1) throw PreconditionError("atom " + s.to_string() + " of Q(X) is not a singleton");
    images[s.first()] = k;
    seen[s.first()] = true;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!seen[i]) throw PreconditionError("singleton {" + x.label(i) + "} is not an atom of Q(X)");
  return ElementMap{x, std::move(atoms.qset), std::move(images)};
}

bool induces_ortho_isomorphism(const ElementMap& m, const QSubsetLattice& qx, const QSubsetLattice& qy) {
  if (!m.is_bijection()) throw PreconditionError("map is not a bijection between the two quantum sets");
  if (qx.size() != qy.size()) return false;
  const auto& x = qx.parent();
  const auto& y = qy.parent();
  std::vector<ElementSet> image;
  image.reserve(qx.size());
  for (const auto& s : qx.closed_sets()) {
    auto t = m.apply(s);
    if (!qy.find(t)) return false;
    image.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < qx.size(); ++i) {
    if (m.apply(qcomplement(x, qx[i])) != qcomplement(y, image[i])) return false;
    for (std::size_t j = i + 1; j < qx.size(); ++j) {
      if (m.apply(qx[i] & qx[j]) != (image[i] & image[j])) return false;
      if (m.apply(closure(x, qx[i] | qx[j])) != closure(y, image[i] | image[j])) return false;
    }
  }
  return true;
}

}  // namespace qsets

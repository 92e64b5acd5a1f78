#include "qsets/qsubsets.hpp"

#include "qsets/error.hpp"

namespace qsets {

QSubsetLattice::QSubsetLattice(QuantumSet parent, std::vector<ElementSet> closed_sets)
    : parent_(std::move(parent)), closed_(std::move(closed_sets)) {
  index_.reserve(closed_.size());
  for (std::size_t i = 0; i < closed_.size(); ++i) {
    if (closed_[i].width() != parent_.size()) throw InputError("closed set width does not match the quantum set");
    index_.emplace(closed_[i], i);
  }
}

std::optional<std::size_t> QSubsetLattice::find(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QSubsetLattice::index_of(const ElementSet& s) const {
  if (auto i = find(s)) return *i;
  throw PreconditionError(s.to_string() + " is not a q-subset");
}

const OrthoLattice& QSubsetLattice::lattice() const {
  const auto n = closed_.size();
  if (n > kMaterializeLimit)
    throw ResourceError("Q(X) has " + std::to_string(n) + " members; lattice tables are limited to " +
                            std::to_string(kMaterializeLimit),
                        n);
  std::call_once(cache_->once, [&] { cache_->lattice = build_lattice(); });
  return *cache_->lattice;
}

OrthoLattice QSubsetLattice::build_lattice() const {
  const auto n = closed_.size();
  RawOrthoPoset raw;
  raw.labels.reserve(n);
  for (const auto& s : closed_) raw.labels.push_back(s.to_string());
  raw.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) raw.leq[i][j] = closed_[i].is_subset_of(closed_[j]);
    raw.ortho.push_back(index_of(qcomplement(parent_, closed_[i])));
  }
  return OrthoLattice::from_raw(std::move(raw));
}

std::vector<ElementSet> next_closure_enumeration(const QuantumSet& x, std::size_t limit) {
  const auto n = x.size();
  std::vector<ElementSet> out;
  auto current = closure(x, x.empty_set());
  out.push_back(current);
  while (!current.is_full()) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.test(i)) {
        current.reset(i);
        continue;
      }
      auto candidate = current;
      candidate.set(i);
      candidate = closure(x, candidate);
      // Canonicity: the closure may not add anything more significant than i.
      if ((candidate - current).first() >= i) {
        current = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    if (out.size() >= limit)
      throw ResourceError("q-subset enumeration exceeded limit of " + std::to_string(limit), out.size() + 1);
    out.push_back(current);
  }
  return out;
}

QSubsetLattice enumerate_qsubsets(const QuantumSet& x, std::size_t limit) {
  return QSubsetLattice(x, next_closure_enumeration(x, limit));
}

bool is_atomic(const QuantumSet& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    ElementSet single(x.size(), {i});
    if (closure(x, single) != single) return false;
  }
  return true;
}

bool is_hereditary(const QSubsetLattice& q) {
  const auto& x = q.parent();
  for (const auto& t : q.closed_sets())
    for (const auto& s : q.closed_sets())
      if (s.is_subset_of(t) && relative_closure(x, t, s) != s) return false;
  return true;
}

bool is_hereditary(const QuantumSet& x, std::size_t limit) { return is_hereditary(enumerate_qsubsets(x, limit)); }

std::optional<std::pair<ElementSet, ElementSet>> hereditary_witness(const QSubsetLattice& q) {
  const auto& x = q.parent();
  for (const auto& s : q.closed_sets()) {
    auto s_perp = qcomplement(x, s);
    for (const auto& t : q.closed_sets())
      if (s != t && s.is_subset_of(t) && !t.intersects(s_perp)) return std::pair{s, t};
  }
  return std::nullopt;
}

std::optional<std::pair<ElementSet, ElementSet>> hereditary_witness(const QuantumSet& x, std::size_t limit) {
  return hereditary_witness(enumerate_qsubsets(x, limit));
}

std::vector<ElementSet> qcentral_elements(const QSubsetLattice& q) {
  std::vector<ElementSet> out;
  for (const auto& s : q.closed_sets()) {
    bool central = true;
    for (const auto& t : q.closed_sets())
      if (!subsets_qcommute(q.parent(), s, t)) {
        central = false;
        break;
      }
    if (central) out.push_back(s);
  }
  return out;
}

std::vector<ElementSet> qcentral_elements(const QuantumSet& x, std::size_t limit) {
  return qcentral_elements(enumerate_qsubsets(x, limit));
}

}  // namespace qsets

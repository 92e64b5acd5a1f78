#include "qsets/ortholattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "qsets/error.hpp"

namespace qsets {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

OrthoVerdict fail(OrthoAxiom axiom, std::size_t p, std::size_t q, std::string message) {
  return OrthoVerdict{axiom, p, q, std::move(message)};
}

struct Tables {
  std::vector<ElementSet> down;
  std::vector<ElementSet> up;
  std::vector<std::size_t> meet;
  std::vector<std::size_t> join;
  std::size_t bottom = kNone;
  std::size_t top = kNone;
};

// Greatest element of `bounds` w.r.t. the given down-sets, i.e. the m in
// bounds whose down-set is exactly `bounds`.
std::size_t extremum(const ElementSet& bounds, const std::vector<ElementSet>& cones) {
  auto want = bounds.count();
  for (auto m = bounds.first(); m < bounds.width(); m = bounds.next(m))
    if (cones[m].count() == want && cones[m] == bounds) return m;
  return kNone;
}

std::string pair_text(const RawOrthoPoset& raw, std::size_t p, std::size_t q) {
  return "(" + raw.labels[p] + ", " + raw.labels[q] + ")";
}

OrthoVerdict check(const RawOrthoPoset& raw, Tables& t) {
  const auto n = raw.labels.size();
  if (raw.leq.size() != n) return fail(OrthoAxiom::Shape, 0, 0, "order matrix is not square");
  for (const auto& row : raw.leq)
    if (row.size() != n) return fail(OrthoAxiom::Shape, 0, 0, "order matrix is not square");
  if (raw.ortho.size() != n) return fail(OrthoAxiom::Shape, 0, 0, "complement map does not cover every element");
  for (std::size_t p = 0; p < n; ++p)
    if (raw.ortho[p] >= n) return fail(OrthoAxiom::Shape, p, p, "complement of " + raw.labels[p] + " is out of range");
  if (n == 0) return fail(OrthoAxiom::Bounds, 0, 0, "empty poset has no bounds");

  for (std::size_t p = 0; p < n; ++p)
    if (!raw.leq[p][p]) return fail(OrthoAxiom::Reflexive, p, p, raw.labels[p] + " ≤ itself fails");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (raw.leq[p][q] && raw.leq[q][p])
        return fail(OrthoAxiom::Antisymmetric, p, q, "mutually comparable distinct elements " + pair_text(raw, p, q));

  t.down.assign(n, ElementSet(n));
  t.up.assign(n, ElementSet(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (raw.leq[p][q]) {
        t.down[q].set(p);
        t.up[p].set(q);
      }
  for (std::size_t p = 0; p < n; ++p)
    for (auto q = t.up[p].first(); q < n; q = t.up[p].next(q))
      if (!t.up[q].is_subset_of(t.up[p])) {
        auto r = (t.up[q] - t.up[p]).first();
        return fail(OrthoAxiom::Transitive, p, r,
                    raw.labels[p] + " ≤ " + raw.labels[q] + " ≤ " + raw.labels[r] + " but not " +
                        raw.labels[p] + " ≤ " + raw.labels[r]);
      }

  for (std::size_t p = 0; p < n; ++p) {
    if (t.up[p].is_full()) t.bottom = p;
    if (t.down[p].is_full()) t.top = p;
  }
  if (t.bottom == kNone) return fail(OrthoAxiom::Bounds, 0, 0, "no least element");
  if (t.top == kNone) return fail(OrthoAxiom::Bounds, 0, 0, "no greatest element");

  t.meet.assign(n * n, kNone);
  t.join.assign(n * n, kNone);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      auto m = extremum(t.down[p] & t.down[q], t.down);
      if (m == kNone) return fail(OrthoAxiom::Meet, p, q, "no meet for " + pair_text(raw, p, q));
      t.meet[p * n + q] = t.meet[q * n + p] = m;
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      auto j = extremum(t.up[p] & t.up[q], t.up);
      if (j == kNone) return fail(OrthoAxiom::Join, p, q, "no join for " + pair_text(raw, p, q));
      t.join[p * n + q] = t.join[q * n + p] = j;
    }

  for (std::size_t p = 0; p < n; ++p)
    if (raw.ortho[raw.ortho[p]] != p)
      return fail(OrthoAxiom::Involution, p, raw.ortho[p], "p′′ ≠ p for p = " + raw.labels[p]);
  for (std::size_t p = 0; p < n; ++p)
    if (t.meet[p * n + raw.ortho[p]] != t.bottom)
      return fail(OrthoAxiom::Complement, p, raw.ortho[p], "p ∧ p′ ≠ 0 for p = " + raw.labels[p]);
  for (std::size_t p = 0; p < n; ++p)
    for (auto q = t.down[p].first(); q < n; q = t.down[p].next(q))
      if (!raw.leq[raw.ortho[p]][raw.ortho[q]])
        return fail(OrthoAxiom::Antitone, q, p,
                    raw.labels[q] + " ≤ " + raw.labels[p] + " but not " + raw.labels[p] + "′ ≤ " +
                        raw.labels[q] + "′");
  return {};
}

}  // namespace

std::string_view axiom_name(OrthoAxiom a) {
  switch (a) {
    case OrthoAxiom::None: return "none";
    case OrthoAxiom::Shape: return "shape";
    case OrthoAxiom::Reflexive: return "reflexivity";
    case OrthoAxiom::Antisymmetric: return "antisymmetry";
    case OrthoAxiom::Transitive: return "transitivity";
    case OrthoAxiom::Bounds: return "bounds";
    case OrthoAxiom::Meet: return "meet";
    case OrthoAxiom::Join: return "join";
    case OrthoAxiom::Involution: return "involution";
    case OrthoAxiom::Complement: return "complement";
    case OrthoAxiom::Antitone: return "antitone";
  }
  return "unknown";
}

RawOrthoPoset raw_from_covers(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& covers,
                              const std::map<std::string, std::string>& ortho) {
  const auto n = labels.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second) throw InputError("duplicate lattice label \"" + labels[i] + "\"");
  auto lookup = [&](const std::string& l, const char* field) {
    auto it = index.find(l);
    if (it == index.end()) throw InputError(std::string(field) + " refers to unknown element \"" + l + "\"");
    return it->second;
  };

  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : covers) up[lookup(lo, "covers")].set(lookup(hi, "covers"));
  // Warshall on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];

  RawOrthoPoset raw;
  raw.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw.leq[i][j] = up[i].test(j);

  raw.ortho.assign(n, kNone);
  for (const auto& [p, q] : ortho) {
    auto ip = lookup(p, "ortho");
    auto iq = lookup(q, "ortho");
    raw.ortho[ip] = iq;
    if (!ortho.contains(q)) raw.ortho[iq] = ip;
  }
  std::size_t bottom = kNone, top = kNone;
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].is_full()) bottom = i;
    if (std::all_of(up.begin(), up.end(), [i](const ElementSet& u) { return u.test(i); })) top = i;
  }
  if (bottom != kNone && top != kNone && raw.ortho[bottom] == kNone && raw.ortho[top] == kNone) {
    raw.ortho[bottom] = top;
    raw.ortho[top] = bottom;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (raw.ortho[i] == kNone) throw InputError("element \"" + labels[i] + "\" has no orthocomplement");
  raw.labels = std::move(labels);
  return raw;
}

OrthoVerdict verify_ortholattice(const RawOrthoPoset& raw) {
  Tables t;
  return check(raw, t);
}

OrthoLattice OrthoLattice::from_raw(RawOrthoPoset raw) {
  Tables t;
  if (auto v = check(raw, t); !v.ok())
    throw InputError("not an ortholattice (" + std::string(axiom_name(v.violated)) + "): " + v.message);
  OrthoLattice l;
  l.raw_ = std::move(raw);
  l.down_ = std::move(t.down);
  l.meet_ = std::move(t.meet);
  l.join_ = std::move(t.join);
  l.bottom_ = t.bottom;
  l.top_ = t.top;
  for (std::size_t p = 0; p < l.size(); ++p)
    if (p != l.bottom_ && l.down_[p].count() == 2) l.atoms_.push_back(p);
  return l;
}

std::optional<OrthoLattice::Element> OrthoLattice::index_of(std::string_view label) const {
  auto it = std::find(raw_.labels.begin(), raw_.labels.end(), label);
  if (it == raw_.labels.end()) return std::nullopt;
  return static_cast<Element>(it - raw_.labels.begin());
}

std::vector<std::pair<OrthoLattice::Element, OrthoLattice::Element>> OrthoLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element q = 0; q < size(); ++q)
    for (auto p = down_[q].first(); p < size(); p = down_[q].next(p)) {
      if (p == q) continue;
      bool between = false;
      for (auto r = down_[q].first(); r < size() && !between; r = down_[q].next(r))
        between = r != p && r != q && down_[r].test(p);
      if (!between) out.emplace_back(p, q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

OrthomodularVerdict is_orthomodular(const OrthoLattice& l) {
  for (std::size_t q = 0; q < l.size(); ++q) {
    const auto& below = l.down_set(q);
    for (auto p = below.first(); p < l.size(); p = below.next(p))
      if (l.join(p, l.meet(q, l.ortho(p))) != q) return {false, std::pair{p, q}};
  }
  return {};
}

AtomisticVerdict is_atomistic(const OrthoLattice& l) {
  AtomisticVerdict v;
  for (std::size_t p = 0; p < l.size(); ++p) {
    if (p == l.bottom()) continue;
    auto acc = l.bottom();
    bool any = false;
    for (auto a : l.atoms())
      if (l.leq(a, p)) {
        any = true;
        acc = l.join(acc, a);
      }
    if (!any) v.atomic = false;
    if (acc != p) v.atomistic = false;
  }
  return v;
}

bool commutes(const OrthoLattice& l, std::size_t p, std::size_t q) {
  return p == l.join(l.meet(p, q), l.meet(p, l.ortho(q)));
}

bool qcommutes(const OrthoLattice& l, std::size_t p, std::size_t q) {
  auto mc = l.ortho(l.meet(p, q));
  return l.leq(l.meet(p, mc), l.ortho(l.meet(q, mc)));
}

std::vector<std::size_t> qcentral_elements(const OrthoLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < l.size(); ++p) {
    bool central = true;
    for (std::size_t q = 0; q < l.size() && central; ++q) central = qcommutes(l, p, q);
    if (central) out.push_back(p);
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> distributivity_witness(const OrthoLattice& l) {
  const auto n = l.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r)
        if (l.meet(p, l.join(q, r)) != l.join(l.meet(p, q), l.meet(p, r))) return std::array{p, q, r};
  return std::nullopt;
}

SubOrthoLattice generated_subortholattice(const OrthoLattice& l, const std::vector<std::size_t>& seeds) {
  std::vector<bool> in(l.size(), false);
  std::vector<std::size_t> members;
  auto add = [&](std::size_t p) {
    if (!in.at(p)) {
      in[p] = true;
      members.push_back(p);
    }
  };
  add(l.bottom());
  add(l.top());
  for (auto s : seeds) add(s);
  for (std::size_t done = 0; done < members.size(); ++done) {
    auto p = members[done];
    add(l.ortho(p));
    for (std::size_t k = 0; k <= done; ++k) {
      add(l.meet(p, members[k]));
      add(l.join(p, members[k]));
    }
  }
  std::sort(members.begin(), members.end());

  std::vector<std::size_t> local(l.size(), kNone);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
  RawOrthoPoset raw;
  for (auto m : members) raw.labels.push_back(l.label(m));
  raw.leq.assign(members.size(), std::vector<bool>(members.size(), false));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) raw.leq[i][j] = l.leq(members[i], members[j]);
    raw.ortho.push_back(local[l.ortho(members[i])]);
  }
  return {OrthoLattice::from_raw(std::move(raw)), std::move(members)};
}

bool is_ortho_isomorphism(const OrthoLattice& from, const OrthoLattice& to, const std::vector<std::size_t>& map) {
  if (map.size() != from.size() || from.size() != to.size()) return false;
  std::vector<bool> hit(to.size(), false);
  for (auto m : map) {
    if (m >= to.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t p = 0; p < from.size(); ++p) {
    if (map[from.ortho(p)] != to.ortho(map[p])) return false;
    for (std::size_t q = 0; q < from.size(); ++q)
      if (from.leq(p, q) != to.leq(map[p], map[q])) return false;
  }
  return true;
}

}  // namespace qsets

#include "qsets/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>

#include "qsets/arc.hpp"
#include "qsets/correspondence.hpp"
#include "qsets/error.hpp"
#include "qsets/interval_union.hpp"
#include "qsets/lattice_corpus.hpp"
#include "qsets/qsubsets.hpp"
#include "qsets/topology.hpp"

namespace qsets::corpus {

namespace {

class Check {
 public:
  Check(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  template <typename Witness>
  void expect(bool ok, Witness&& witness) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
  }

  void note(std::string witness) {
    if (result_.passed) result_.witness = std::move(witness);
  }

  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string describe_qset(const QuantumSet& x) {
  std::string out = "X{" + std::to_string(x.size()) + ":";
  for (auto [i, j] : x.edges()) out += " " + x.label(i) + "-" + x.label(j);
  return out + "}";
}

std::vector<std::size_t> sets_to_indices(const QSubsetLattice& q, const std::vector<ElementSet>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(q.index_of(s));
  return out;
}

QuantumSet permuted(const QuantumSet& x, const std::vector<std::size_t>& perm) {
  std::vector<QuantumSet::IndexPair> pairs;
  for (auto [i, j] : x.edges()) pairs.emplace_back(perm[i], perm[j]);
  return QuantumSet::from_index_pairs(x.labels(), pairs);
}

struct NamedLattice {
  std::string name;
  OrthoLattice lattice;
};

std::vector<NamedLattice> lattice_corpus(std::size_t max_n) {
  std::vector<NamedLattice> out;
  for (auto& [name, l] : lattices::standard_corpus()) out.push_back({name, std::move(l)});
  for (std::size_t n = 0; n <= max_n; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      auto q = enumerate_qsubsets(quantum_sets::from_edge_mask(n, m));
      out.push_back({"Q(n=" + std::to_string(n) + ",mask=" + std::to_string(m) + ")", q.lattice()});
    }
  }
  return out;
}

std::string pair_text(const OrthoLattice& l, std::size_t p, std::size_t q) {
  return "(" + l.label(p) + ", " + l.label(q) + ")";
}

}  // namespace

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

io::Json RunReport::to_json() const {
  io::Json inputs = io::Json::array();
  for (const auto& [name, d] : input_digests) inputs.push_back({{"suite", name}, {"digest", d}});
  io::Json list = io::Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    failed += c.passed ? 0 : 1;
    list.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"witness", c.witness}});
  }
  io::Json out = {{"format", kFormat},
                  {"command", command},
                  {"inputs", inputs},
                  {"checks", list},
                  {"summary", {{"checks", checks.size()}, {"failed", failed}}},
                  {"exit_status", exit_status()}};
  if (duration_ms) out["duration_ms"] = *duration_ms;
  return out;
}

std::string RunReport::serialize() const { return to_json().dump(2) + "\n"; }

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<ElementSet> brute_force_qsubsets(const QuantumSet& x) {
  const auto n = x.size();
  if (n > 20) throw ResourceError("power-set filter limited to 20 elements", n);
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    ElementSet d(n);
    for (std::size_t b = 0; b < n; ++b)
      if ((m >> b) & 1U) d.set(b);
    if (closure(x, d) == d) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuantumSet random_quantum_set(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = rng() % (max_n + 1);
  const auto density = rng() % 9;  // edge probability density/8
  std::vector<QuantumSet::IndexPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 8 < density) pairs.emplace_back(i, j);
  return QuantumSet::from_index_pairs(numbered_labels(n), pairs);
}

std::vector<CheckResult> structure_suite(std::size_t min_n, std::size_t max_n) {
  std::vector<CheckResult> out;
  for (std::size_t n = min_n; n <= max_n; ++n) {
    const auto tag = " (n=" + std::to_string(n) + ")";
    Check lattice_ok("structure", "Q(X) is an ortholattice" + tag);
    Check heredity("structure", "hereditary <=> orthomodular <=> no witness" + tag);
    Check atomic("structure", "atomic => atomistic with singleton atoms" + tag);
    Check boolean("structure", "atomic: Boolean <=> atoms q-commute <=> classical" + tag);
    Check central("structure", "q-central elements: subset law, lattice law and closed forms agree" + tag);
    Check atom_map("structure", "atomic: X is strictly quantum bijective to the atoms of Q(X)" + tag);
    Check distributive("structure", "hereditary: q-commuting S,T generate a distributive sublattice" + tag);

    const std::uint64_t masks = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      auto x = quantum_sets::from_edge_mask(n, mask);
      auto q = enumerate_qsubsets(x);
      const OrthoLattice* l = nullptr;
      try {
        l = &q.lattice();
      } catch (const InputError& e) {
        lattice_ok.expect(false, [&] { return describe_qset(x) + ": " + e.what(); });
        continue;
      }
      bool structure = q.find(x.empty_set()) && q.find(x.full_set());
      for (std::size_t i = 0; i < q.size() && structure; ++i)
        for (std::size_t j = i + 1; j < q.size() && structure; ++j) structure = q.find(q[i] & q[j]).has_value();
      lattice_ok.expect(structure, [&] { return describe_qset(x) + ": Q(X) not closed under intersection"; });

      const bool hereditary = is_hereditary(q);
      const auto om = is_orthomodular(*l);
      const auto witness = hereditary_witness(q);
      heredity.expect(hereditary == om.orthomodular && om.orthomodular == !witness.has_value(), [&] {
        return describe_qset(x) + ": hereditary=" + std::to_string(hereditary) +
               " orthomodular=" + std::to_string(om.orthomodular) + " witness=" + std::to_string(witness.has_value());
      });

      const bool is_atomic_x = is_atomic(x);
      if (is_atomic_x) {
        auto av = is_atomistic(*l);
        bool singletons = l->atoms().size() == n;
        for (auto a : l->atoms()) singletons = singletons && q[a].count() == 1;
        atomic.expect(av.atomistic && singletons, [&] { return describe_qset(x); });

        bool atoms_commute = true;
        for (auto a : l->atoms())
          for (auto b : l->atoms()) atoms_commute = atoms_commute && qcommutes(*l, a, b);
        const bool dist = is_distributive(*l);
        boolean.expect(dist == atoms_commute && atoms_commute == x.is_classical(), [&] {
          return describe_qset(x) + ": distributive=" + std::to_string(dist) +
                 " atoms-q-commute=" + std::to_string(atoms_commute);
        });

        atom_map.expect(is_strict_quantum_bijection(singleton_atom_map(q)), [&] { return describe_qset(x); });
      }

      auto by_subsets = qcentral_elements(q);
      auto by_lattice = qcentral_elements(*l);
      central.expect(sets_to_indices(q, by_subsets) == by_lattice,
                     [&] { return describe_qset(x) + ": subset and lattice q-centres differ"; });
      if (hereditary) {
        std::vector<ElementSet> closed_form;
        for (const auto& s : q.closed_sets()) {
          auto rest = x.full_set() - (s | qcomplement(x, s));
          bool none = std::none_of(q.closed_sets().begin(), q.closed_sets().end(),
                                   [&](const ElementSet& t) { return !t.empty() && t.is_subset_of(rest); });
          if (none) closed_form.push_back(s);
        }
        central.expect(closed_form == by_subsets,
                       [&] { return describe_qset(x) + ": centre differs from the no-q-subset-outside-S∪S^⊥ form"; });
        if (is_atomic_x) {
          std::vector<ElementSet> splitting;
          for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            ElementSet d(n);
            for (std::size_t b = 0; b < n; ++b)
              if ((m >> b) & 1U) d.set(b);
            if (qcomplement(x, d) == d.complement()) splitting.push_back(std::move(d));
          }
          std::sort(splitting.begin(), splitting.end());
          central.expect(splitting == by_subsets,
                         [&] { return describe_qset(x) + ": centre differs from {D : D^⊥ = X∖D}"; });
        }
        if (n <= 4) {
          for (std::size_t s = 0; s < q.size(); ++s)
            for (std::size_t t = 0; t < q.size(); ++t) {
              if (!subsets_qcommute(x, q[s], q[t])) continue;
              auto sub = generated_subortholattice(*l, {s, t});
              distributive.expect(is_distributive(sub.lattice) && qcommutes(*l, s, l->ortho(t)), [&] {
                return describe_qset(x) + ": S=" + describe(x, q[s]) + " T=" + describe(x, q[t]);
              });
            }
        }
      }
    }
    for (auto* c : {&lattice_ok, &heredity, &atomic, &boolean, &central, &atom_map, &distributive})
      out.push_back(std::move(*c).done());
  }

  // A bijection is strict iff it induces an ortholattice isomorphism.
  Check strict("structure", "strict quantum bijection <=> induced ortholattice isomorphism");
  auto probe = [&](const QuantumSet& x, const QSubsetLattice& qx, const std::vector<std::size_t>& perm,
                   const QuantumSet& y) {
    ElementMap m{x, y, perm};
    auto qy = enumerate_qsubsets(y);
    const bool sqb = is_strict_quantum_bijection(m);
    const bool iso = induces_ortho_isomorphism(m, qx, qy);
    strict.expect(sqb == iso, [&] {
      return describe_qset(x) + " -> " + describe_qset(y) + ": strict=" + std::to_string(sqb) +
             " induced-iso=" + std::to_string(iso);
    });
  };
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 4); ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      auto x = quantum_sets::from_edge_mask(n, mask);
      auto qx = enumerate_qsubsets(x);
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        probe(x, qx, perm, permuted(x, perm));
        probe(x, qx, perm, x);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 5 + rng() % 2;
    auto x = quantum_sets::from_edge_mask(n, rng());
    auto qx = enumerate_qsubsets(x);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    probe(x, qx, perm, permuted(x, perm));
    probe(x, qx, perm, quantum_sets::from_edge_mask(n, rng()));
  }
  out.push_back(std::move(strict).done());
  return out;
}

std::vector<CheckResult> oracle_suite(std::uint64_t seed, std::size_t cases, std::size_t max_n) {
  Check c("oracle", "lectic enumeration equals the power-set filter");
  std::mt19937_64 rng(seed);
  std::size_t total = 0;
  for (std::size_t k = 0; k < cases; ++k) {
    auto x = random_quantum_set(rng, max_n);
    auto fast = next_closure_enumeration(x);
    auto slow = brute_force_qsubsets(x);
    total += fast.size();
    c.expect(fast == slow, [&] {
      return describe_qset(x) + ": enumeration " + std::to_string(fast.size()) + " sets, filter " +
             std::to_string(slow.size());
    });
  }
  c.note(std::to_string(total) + " closed sets compared");
  return {std::move(c).done()};
}

std::vector<CheckResult> correspondence_suite(std::size_t max_n) {
  Check xi0("correspondence", "Xi0 is a bijective ortholattice homomorphism onto Q(L*)");
  Check xi("correspondence", "Xi recovers atomistic lattices from their atoms");
  Check reject("correspondence", "Xi rejects non-atomistic lattices");
  for (const auto& [name, l] : lattice_corpus(max_n)) {
    auto r = xi0_completion(l);
    xi0.expect(r.iso(), [&] { return name + ": " + r.failure; });
    if (is_atomistic(l).atomistic) {
      auto a = xi_atoms(l);
      xi.expect(a.iso(), [&] { return name + ": " + a.failure; });
    } else {
      bool threw = false;
      try {
        (void)xi_atoms(l);
      } catch (const PreconditionError&) {
        threw = true;
      }
      reject.expect(threw, [&] { return name; });
    }
  }
  return {std::move(xi0).done(), std::move(xi).done(), std::move(reject).done()};
}

std::vector<CheckResult> commutation_suite(std::size_t max_n) {
  Check coincide("commutation", "orthomodular <=> commutes and q-commutes coincide");
  Check symmetric("commutation", "q-commutativity is symmetric");
  Check kalmbach("commutation", "commutativity is symmetric exactly on orthomodular lattices");
  auto corpus = lattice_corpus(max_n);
  corpus.push_back({"Q(5-cycle)", enumerate_qsubsets(quantum_sets::cycle(5)).lattice()});

  std::vector<CheckResult> witnesses;
  for (const auto& [name, l] : corpus) {
    const bool om = is_orthomodular(l).orthomodular;
    std::optional<std::pair<std::size_t, std::size_t>> differ;
    bool sym = true, comm_sym = true;
    for (std::size_t p = 0; p < l.size(); ++p)
      for (std::size_t q = 0; q < l.size(); ++q) {
        if (!differ && commutes(l, p, q) != qcommutes(l, p, q)) differ = std::pair{p, q};
        sym = sym && qcommutes(l, p, q) == qcommutes(l, q, p);
        comm_sym = comm_sym && commutes(l, p, q) == commutes(l, q, p);
      }
    coincide.expect(om == !differ.has_value(), [&] { return name; });
    symmetric.expect(sym, [&] { return name; });
    kalmbach.expect(om == comm_sym, [&] { return name; });
    if (name == "O6" || name == "Q(5-cycle)") {
      Check w("commutation", name + " exhibits a pair where commutes and q-commutes differ");
      w.expect(differ.has_value(), [&] { return name + ": no differing pair"; });
      if (differ) {
        auto [p, q] = *differ;
        w.note(pair_text(l, p, q) + ": commutes=" + std::to_string(commutes(l, p, q)) +
               " q-commutes=" + std::to_string(qcommutes(l, p, q)));
      }
      witnesses.push_back(std::move(w).done());
    }
  }
  std::vector<CheckResult> out{std::move(coincide).done(), std::move(symmetric).done(), std::move(kalmbach).done()};
  out.insert(out.end(), witnesses.begin(), witnesses.end());
  return out;
}

std::vector<CheckResult> examples_suite() {
  std::vector<CheckResult> out;
  auto golden = [&](std::string name, bool ok, std::string got) {
    Check c("examples", std::move(name));
    c.expect(ok, [&] { return "got " + got; });
    if (ok) c.note(got);
    out.push_back(std::move(c).done());
  };
  const Rational one(1);
  auto iv = [](std::vector<Interval> ivs, Rational d = Rational(1)) { return IntervalUnion(std::move(d), std::move(ivs)); };
  const auto ninf = Endpoint::neg_inf();
  const auto pinf = Endpoint::pos_inf();

  {
    auto s = iv({{0, Rational(1, 2)}});
    auto got = qcomp_interval(s);
    golden("[0,1/2]^⊥ = (-inf,-1] ∪ [3/2,inf)", got == iv({{ninf, -1}, {Rational(3, 2), pinf}}), to_string(got));
    auto cl = closure_interval(s);
    golden("[0,1/2]^⊥⊥ = [0,1/2]", cl == s, to_string(cl));
  }
  for (auto [u, v] : {std::pair{3, 0}, std::pair{2, 0}, std::pair{7, -2}}) {
    auto pts = IntervalUnion::points(one, {Rational(v), Rational(u)});
    auto got = qcomp_interval(pts);
    auto want = iv({{ninf, v - 1}, {v + 1, u - 1}, {u + 1, pinf}});
    auto tag = "u=" + std::to_string(u) + ", v=" + std::to_string(v);
    golden("{u,v}^⊥ = (-inf,v-1] ∪ [v+1,u-1] ∪ [u+1,inf) for " + tag, got == want, to_string(got));
    golden("{u,v}^⊥⊥ = {u,v} for " + tag, closure_interval(pts) == pts, to_string(closure_interval(pts)));
  }
  {
    auto pts = IntervalUnion::points(one, {Rational(0), Rational(3, 2)});
    auto got = closure_interval(pts);
    golden("{0,3/2}^⊥⊥ = [0,3/2]", got == iv({{0, Rational(3, 2)}}), to_string(got));
  }
  {
    auto t = iv({{0, 1}});
    auto s = iv({{0, Rational(1, 2)}});
    auto meet = qcomp_interval(s).intersect(t);
    auto rel = relative_closure_interval(t, s);
    golden("real line: T=[0,1], S=[0,1/2] gives S^⊥ ∩ T = ∅ and relative closure T",
           is_Q1(s) && is_Q1(t) && meet.is_empty() && rel == t, to_string(meet) + "; " + to_string(rel));
  }

  for (int k = 0; k < 12; ++k) {
    Rational theta(k, 4);
    auto got = qcomp_arc(ArcSet::point(theta));
    golden("{θ}^⊥ = κ([θ+1, θ+2]) for θ=" + to_string(theta), got == ArcSet::arc(theta + 1, one), to_string(got));
    golden("{θ}^⊥⊥ = {θ} for θ=" + to_string(theta), qcomp_arc(got) == ArcSet::point(theta), to_string(qcomp_arc(got)));
  }
  {
    auto a = closure_points({CirclePoint(Rational(0)), CirclePoint(Rational(1, 2))});
    golden("closure {0,1/2} is the smallest arc arc(0, 1/2)", a == ArcSet::arc(0, Rational(1, 2)), to_string(a));
    auto b = closure_points({CirclePoint(Rational(0)), CirclePoint(Rational(3, 2))});
    golden("closure {0,3/2} is RP1", b.is_full(), to_string(b));
    auto c = closure_points({CirclePoint(Rational(5, 2)), CirclePoint(Rational(1, 4))});
    golden("closure {5/2,1/4} wraps to arc(5/2, 3/4)", c == ArcSet::arc(Rational(5, 2), Rational(3, 4)), to_string(c));
  }
  {
    auto t = ArcSet::arc(0, 1);
    auto s = ArcSet::arc(0, Rational(1, 2));
    auto meet = arc_meet(qcomp_arc(s), t);
    auto rel = arc_meet(qcomp_arc(meet), t);
    golden("RP1: T=arc(0,1), S=arc(0,1/2) gives S^⊥ ∩ T = ∅ and relative closure T",
           meet.is_empty() && rel == t, to_string(meet) + "; " + to_string(rel));
  }
  {
    std::vector<ArcSet> arcs{ArcSet::empty(), ArcSet::full()};
    for (int s = 0; s < 12; ++s)
      for (int l = 0; l <= 4; ++l) arcs.push_back(ArcSet::arc(Rational(s, 4), Rational(l, 4)));
    std::vector<std::string> central;
    for (const auto& s : arcs)
      if (std::all_of(arcs.begin(), arcs.end(), [&](const ArcSet& t) { return arc_qcommutes(s, t); }))
        central.push_back(to_string(s));
    golden("RP1: the q-central elements are ∅ and RP1 (1/4 grid)",
           central == std::vector<std::string>{"∅", "RP1"}, std::to_string(central.size()) + " central");
  }
  {
    auto x = quantum_sets::cycle(4);
    auto q = enumerate_qsubsets(x);
    golden("4-cycle: {1}^⊥ = {2,4}", qcomplement(x, x.subset({"1"})) == x.subset({"2", "4"}),
           describe(x, qcomplement(x, x.subset({"1"}))));
    golden("4-cycle: Q(X) = {∅, {1,3}, {2,4}, X}", q.size() == 4 && q.find(x.subset({"1", "3"})) && q.find(x.subset({"2", "4"})),
           std::to_string(q.size()) + " sets");
    auto c5 = quantum_sets::cycle(5);
    auto w = hereditary_witness(c5);
    golden("5-cycle: atomic, not hereditary, witness S ⊊ T with T ∩ S^⊥ = ∅",
           is_atomic(c5) && !is_hereditary(c5) && w && w->first != w->second && w->first.is_subset_of(w->second) &&
               !w->second.intersects(qcomplement(c5, w->first)),
           w ? describe(c5, w->first) + " ⊆ " + describe(c5, w->second) : "none");
    auto mo2 = quantum_sets::mo2_graph();
    auto qm = enumerate_qsubsets(mo2);
    golden("MO2 graph: {a} ∨ {b} = X and X is hereditary",
           qunion(mo2, mo2.subset({"a"}), mo2.subset({"b"})).is_full() && is_hereditary(qm) && qm.size() == 6,
           std::to_string(qm.size()) + " q-subsets");
  }
  return out;
}

std::vector<CheckResult> arcs_suite() {
  std::vector<ArcSet> arcs;
  for (int s = 0; s < 36; ++s)
    for (int l = 0; l <= 12; ++l) arcs.push_back(ArcSet::arc(Rational(s, 12), Rational(l, 12)));
  std::vector<ArcSet> all{ArcSet::empty(), ArcSet::full()};
  all.insert(all.end(), arcs.begin(), arcs.end());

  Check involution("arcs", "double q-complement is the identity on Q(RP1)");
  for (const auto& a : all) involution.expect(qcomp_arc(qcomp_arc(a)) == a, [&] { return to_string(a); });

  Check comm("arcs", "commutes agrees with its case description on the 1/12 grid");
  Check qcomm("arcs", "q-commutes agrees with its case description on the 1/12 grid");
  Check sym("arcs", "q-commutes is symmetric on the 1/12 grid");
  Check gap("arcs", "some pairs q-commute without commuting");
  std::size_t gap_pairs = 0;
  std::vector<bool> qcommutes_all(all.size(), true);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      const auto& s = all[i];
      const auto& t = all[j];
      const bool c = arc_commutes(s, t);
      const bool qc = arc_qcommutes(s, t);
      if (!qc) qcommutes_all[i] = false;
      if (qc && !c) ++gap_pairs;
      if (s.is_arc() && t.is_arc()) {
        comm.expect(c == arc_commutes_by_cases(s, t), [&] { return to_string(s) + " vs " + to_string(t); });
        qcomm.expect(qc == arc_qcommutes_by_cases(s, t), [&] { return to_string(s) + " vs " + to_string(t); });
      } else {
        // Trivial elements commute with everything in any ortholattice.
        comm.expect(c && qc, [&] { return to_string(s) + " vs " + to_string(t); });
      }
      if (j > i) sym.expect(qc == arc_qcommutes(t, s), [&] { return to_string(s) + " vs " + to_string(t); });
    }
  gap.expect(gap_pairs > 0, [] { return std::string("none found"); });
  gap.note(std::to_string(gap_pairs) + " pairs");

  Check central("arcs", "the q-central elements are exactly ∅ and RP1");
  for (std::size_t i = 0; i < all.size(); ++i)
    central.expect(qcommutes_all[i] == !all[i].is_arc(), [&] { return to_string(all[i]); });

  Check smallest("arcs", "closure of point pairs follows the smallest-arc / RP1 rule");
  for (int a = 0; a < 36; ++a)
    for (int b = 0; b < 36; ++b) {
      Rational pa(a, 12), pb(b, 12);
      // Two points: the shorter way round is the smallest containing arc.
      Rational forward = kappa(pb - pa);
      Rational backward = kappa(pa - pb);
      ArcSet want = ArcSet::full();
      if (forward <= backward && forward <= 1)
        want = ArcSet::arc(pa, forward);
      else if (backward < forward && backward <= 1)
        want = ArcSet::arc(pb, backward);
      auto got = closure_points({CirclePoint(pa), CirclePoint(pb)});
      smallest.expect(got == want, [&] { return to_string(pa) + "," + to_string(pb) + " -> " + to_string(got); });
    }

  return {std::move(involution).done(), std::move(comm).done(),    std::move(qcomm).done(),
          std::move(sym).done(),        std::move(gap).done(),     std::move(central).done(),
          std::move(smallest).done()};
}

std::vector<CheckResult> regular_open_suite(std::uint64_t seed, std::size_t samples) {
  auto boolean_check = [](Check& c, const FiniteTopology& t, const std::string& tag) {
    auto r = regular_open_lattice(t);
    c.expect(r.verdict.ok() && r.orthomodular && r.distributive && r.join_matches_closure_formula, [&] {
      return tag + ": ortholattice=" + std::to_string(r.verdict.ok()) + " orthomodular=" +
             std::to_string(r.orthomodular) + " distributive=" + std::to_string(r.distributive);
    });
  };
  Check count3("regular-open", "there are 29 topologies on 3 points");
  auto t3 = all_topologies(3);
  count3.expect(t3.size() == 29, [&] { return std::to_string(t3.size()); });

  Check all3("regular-open", "regular open sets form a Boolean algebra (all topologies on 3 points)");
  for (std::size_t i = 0; i < t3.size(); ++i) boolean_check(all3, t3[i], "topology #" + std::to_string(i));

  Check all4("regular-open", "regular open sets form a Boolean algebra (all 355 topologies on 4 points)");
  auto t4 = all_topologies(4);
  all4.expect(t4.size() == 355, [&] { return std::to_string(t4.size()) + " topologies enumerated"; });
  for (std::size_t i = 0; i < t4.size(); ++i) boolean_check(all4, t4[i], "topology #" + std::to_string(i));

  Check sampled("regular-open", "regular open sets form a Boolean algebra (seeded topologies on 4-6 points)");
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t n = 4 + rng() % 3;
    auto t = random_topology(n, rng);
    boolean_check(sampled, t, "sample #" + std::to_string(k) + " (n=" + std::to_string(n) + ")");
  }
  return {std::move(count3).done(), std::move(all3).done(), std::move(all4).done(), std::move(sampled).done()};
}

std::vector<CheckResult> quantum_topology_suite() {
  std::vector<CheckResult> out;

  Check classical("quantum-topology", "on classical carriers S1-S3 accept exactly ordinary closed-set systems");
  const std::size_t expected_counts[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    auto q = enumerate_qsubsets(quantum_sets::classical(n));
    const auto& l = q.lattice();
    const std::size_t size = q.size();
    std::size_t accepted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      std::vector<std::size_t> family;
      std::vector<ElementSet> sets;
      for (std::size_t i = 0; i < size; ++i)
        if ((mask >> i) & 1U) {
          family.push_back(i);
          sets.push_back(q[i]);
        }
      const bool quantum = verify_quantum_topology(l, family).ok();
      std::vector<ElementSet> opens;
      for (const auto& s : sets) opens.push_back(s.complement());
      const bool ordinary = FiniteTopology::is_topology(n, opens);
      accepted += quantum ? 1 : 0;
      classical.expect(quantum == ordinary, [&] { return "n=" + std::to_string(n) + " family mask " + std::to_string(mask); });
    }
    classical.expect(accepted == expected_counts[n], [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(accepted) + " accepted";
    });
  }
  out.push_back(std::move(classical).done());

  Check minimal("quantum-topology", "generated topology is the least S1-S3 family containing the generators");
  std::vector<std::pair<std::string, OrthoLattice>> carriers;
  for (auto& [name, l] : lattices::standard_corpus())
    if (l.size() <= 16) carriers.emplace_back(name, std::move(l));
  for (auto [name, x] : {std::pair{"Q(4-cycle)", quantum_sets::cycle(4)}, std::pair{"Q(5-cycle)", quantum_sets::cycle(5)},
                         std::pair{"Q(MO2 graph)", quantum_sets::mo2_graph()}, std::pair{"Q(path 4)", quantum_sets::path(4)},
                         std::pair{"Q(path 5)", quantum_sets::path(5)}})
    carriers.emplace_back(name, enumerate_qsubsets(x).lattice());
  for (const auto& [name, l] : carriers) {
    const std::size_t size = l.size();
    const std::uint32_t required = (std::uint32_t{1} << l.bottom()) | (std::uint32_t{1} << l.top());
    std::vector<std::uint32_t> valid;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << size); ++mask) {
      if ((mask & required) != required) continue;
      std::vector<std::size_t> family;
      for (std::size_t i = 0; i < size; ++i)
        if ((mask >> i) & 1U) family.push_back(i);
      if (verify_quantum_topology(l, family).ok()) valid.push_back(mask);
    }
    auto probe = [&](std::vector<std::size_t> gens) {
      std::uint32_t g = 0;
      for (auto i : gens) g |= std::uint32_t{1} << i;
      std::uint32_t least = ~std::uint32_t{0};
      for (auto f : valid)
        if ((f & g) == g) least &= f;
      auto generated = generate_topology(l, gens);
      std::uint32_t got = 0;
      for (auto i : generated) got |= std::uint32_t{1} << i;
      minimal.expect(got == least && verify_quantum_topology(l, generated).ok(), [&] {
        std::string s = name + " generators";
        for (auto i : gens) s += " " + l.label(i);
        return s;
      });
    };
    probe({});
    for (std::size_t i = 0; i < size; ++i) {
      probe({i});
      for (std::size_t j = i + 1; j < size; ++j) probe({i, j});
    }
  }
  out.push_back(std::move(minimal).done());

  Check examples("quantum-topology", "worked topology examples");
  {
    auto x = quantum_sets::mo2_graph();
    auto q = enumerate_qsubsets(x);
    auto fam = carrier_indices(q, {x.empty_set(), x.subset({"a"}), x.subset({"b"}), x.full_set()});
    examples.expect(verify_quantum_topology(q.lattice(), fam).ok(), [] { return std::string("MO2 family rejected"); });
    auto gen = generate_topology(q, {x.subset({"a"})});
    examples.expect(gen.closed_sets() == std::vector<ElementSet>{x.empty_set(), x.subset({"a"}), x.full_set()},
                    [] { return std::string("MO2 generated family differs"); });

    auto c4 = quantum_sets::cycle(4);
    auto q4 = enumerate_qsubsets(c4);
    ElementMap rot{c4, c4, {1, 2, 3, 0}};
    QuantumTopology whole(q4, q4.closed_sets());
    QuantumTopology partial(q4, {c4.empty_set(), c4.subset({"1", "3"}), c4.full_set()});
    examples.expect(is_strict_quantum_homeomorphism(rot, whole, whole) && !is_strict_quantum_homeomorphism(rot, partial, partial),
                    [] { return std::string("4-cycle rotation"); });

    auto g = classical_gelfand(3);
    examples.expect(g.family().size() == 8 && is_distributive(g.carrier().lattice()),
                    [] { return std::string("classical spectrum on 3 points"); });
  }
  out.push_back(std::move(examples).done());
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"structure", "oracle", "correspondence", "commutation",
                                              "examples",  "arcs",   "regular-open",   "quantum-topology"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const CorpusSpec& spec) {
  if (name == "structure") return structure_suite(spec.exhaustive_min_n, spec.exhaustive_max_n);
  if (name == "oracle") return oracle_suite(spec.seed, spec.random_cases, spec.random_max_n);
  if (name == "correspondence") return correspondence_suite(spec.exhaustive_max_n);
  if (name == "commutation") return commutation_suite(spec.exhaustive_max_n);
  if (name == "examples") return examples_suite();
  if (name == "arcs") return arcs_suite();
  if (name == "regular-open") return regular_open_suite(spec.seed, spec.topology_samples);
  if (name == "quantum-topology") return quantum_topology_suite();
  throw InputError("unknown suite \"" + std::string(name) + "\"");
}

RunReport run_corpus(const CorpusSpec& spec, std::string command) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = std::move(command);
  const auto& names = spec.suites.empty() ? suite_names() : spec.suites;
  for (const auto& name : names) {
    const auto params = name + ";n=" + std::to_string(spec.exhaustive_min_n) + ".." +
                        std::to_string(spec.exhaustive_max_n) + ";seed=" + std::to_string(spec.seed) +
                        ";random=" + std::to_string(spec.random_cases) + "x" + std::to_string(spec.random_max_n) +
                        ";topologies=" + std::to_string(spec.topology_samples);
    report.input_digests.emplace_back(name, digest(params));
    auto results = run_suite(name, spec);
    report.checks.insert(report.checks.end(), results.begin(), results.end());
  }
  if (spec.timing)
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qsets::corpus

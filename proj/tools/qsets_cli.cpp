// qsets: command-line front end for quantum sets, their q-subset lattices,
// the real-line and projective-line models, and quantum topologies.
//
// Exit status: 0 success, 1 a checked property failed, 2 bad input or a
// resource limit was hit.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qsets/arc.hpp"
#include "qsets/corpus.hpp"
#include "qsets/correspondence.hpp"
#include "qsets/error.hpp"
#include "qsets/hasse.hpp"
#include "qsets/interval_union.hpp"
#include "qsets/io.hpp"
#include "qsets/qsubsets.hpp"
#include "qsets/topology.hpp"

namespace {

using qsets::io::Json;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputFailure = 2;

Json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw qsets::InputError("cannot open " + path);
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw qsets::InputError(path + ": malformed JSON: " + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int analyze(const std::string& path, std::size_t limit, bool json) {
  auto x = qsets::io::quantum_set_from_json(read_json(path));
  auto q = qsets::enumerate_qsubsets(x, limit);
  const bool atomic = qsets::is_atomic(x);
  const bool hereditary = qsets::is_hereditary(q);
  auto witness = qsets::hereditary_witness(q);
  auto central = qsets::qcentral_elements(q);
  if (json) {
    Json out = {{"elements", x.size()},
                {"q_distinct_pairs", x.edge_count()},
                {"classical", x.is_classical()},
                {"qsubsets", q.size()},
                {"atomic", atomic},
                {"hereditary", hereditary},
                {"qcentral", Json::array()}};
    for (const auto& c : central) out["qcentral"].push_back(qsets::describe(x, c));
    if (witness) out["witness"] = {qsets::describe(x, witness->first), qsets::describe(x, witness->second)};
    emit(out);
    return kOk;
  }
  std::cout << "elements:        " << x.size() << "\n"
            << "q-distinct pairs: " << x.edge_count() << "\n"
            << "classical:       " << yes_no(x.is_classical()) << "\n"
            << "q-subsets:       " << q.size() << "\n"
            << "atomic:          " << yes_no(atomic) << "\n"
            << "hereditary:      " << yes_no(hereditary) << "\n";
  if (witness)
    std::cout << "witness:         S=" << qsets::describe(x, witness->first)
              << " T=" << qsets::describe(x, witness->second) << "  (S ⊊ T, T ∩ S^⊥ = ∅)\n";
  std::cout << "q-central:       " << central.size() << (central.size() > 16 ? " (use --json to list)" : "");
  if (central.size() <= 16)
    for (const auto& c : central) std::cout << " " << qsets::describe(x, c);
  std::cout << "\n";
  return kOk;
}

int lattice(const std::string& path, std::size_t limit, bool dot, bool json) {
  auto x = qsets::io::quantum_set_from_json(read_json(path));
  auto q = qsets::enumerate_qsubsets(x, limit);
  if (dot) {
    std::cout << qsets::export_hasse(q);
    return kOk;
  }
  if (json) {
    emit(qsets::io::lattice_report(q));
    return kOk;
  }
  for (const auto& s : q.closed_sets()) std::cout << s.to_string() << "  " << qsets::describe(x, s) << "\n";
  return kOk;
}

int check(const std::string& path, bool dot, bool json) {
  auto raw = qsets::io::raw_lattice_from_json(read_json(path));
  auto verdict = qsets::verify_ortholattice(raw);
  if (!verdict.ok()) {
    if (json)
      emit({{"ortholattice", false}, {"axiom", qsets::axiom_name(verdict.violated)}, {"message", verdict.message}});
    else
      std::cout << "not an ortholattice: " << qsets::axiom_name(verdict.violated) << ": " << verdict.message << "\n";
    return kPropertyFailure;
  }
  auto l = qsets::OrthoLattice::from_raw(std::move(raw));
  if (dot) {
    std::cout << qsets::export_hasse(l);
    return kOk;
  }
  auto om = qsets::is_orthomodular(l);
  auto at = qsets::is_atomistic(l);
  const bool distributive = qsets::is_distributive(l);
  if (json) {
    Json out = {{"ortholattice", true},
                {"elements", l.size()},
                {"orthomodular", om.orthomodular},
                {"atomic", at.atomic},
                {"atomistic", at.atomistic},
                {"distributive", distributive}};
    if (om.witness) out["orthomodular_witness"] = {l.label(om.witness->first), l.label(om.witness->second)};
    emit(out);
  } else {
    std::cout << "ortholattice:  yes (" << l.size() << " elements)\n"
              << "orthomodular:  " << yes_no(om.orthomodular);
    if (om.witness)
      std::cout << "  (witness p=" << l.label(om.witness->first) << " ≤ q=" << l.label(om.witness->second) << ")";
    std::cout << "\natomic:        " << yes_no(at.atomic) << "\natomistic:     " << yes_no(at.atomistic)
              << "\ndistributive:  " << yes_no(distributive) << "\n";
  }
  return kOk;
}

int complete(const std::string& path, bool json) {
  auto l = qsets::OrthoLattice::from_raw(qsets::io::raw_lattice_from_json(read_json(path)));
  auto r = qsets::xi0_completion(l);
  std::optional<qsets::Representation> atoms;
  if (qsets::is_atomistic(l).atomistic) atoms = qsets::xi_atoms(l);
  const bool ok = r.iso() && (!atoms || atoms->iso());
  if (json) {
    Json out = {{"points", r.points.qset.size()}, {"qsubsets", r.target.size()}, {"xi0_isomorphism", r.iso()}};
    if (!r.failure.empty()) out["xi0_failure"] = r.failure;
    if (atoms) out["xi_atoms_isomorphism"] = atoms->iso();
    emit(out);
  } else {
    std::cout << "L* points:      " << r.points.qset.size() << "\n"
              << "|Q(L*)|:        " << r.target.size() << "\n"
              << "Xi0 iso:        " << yes_no(r.iso()) << (r.failure.empty() ? "" : "  (" + r.failure + ")") << "\n";
    if (atoms) std::cout << "Xi (atoms) iso: " << yes_no(atoms->iso()) << "\n";
  }
  return ok ? kOk : kPropertyFailure;
}

int interval(const std::string& path, const std::string& op, const std::string& within, bool json) {
  auto u = qsets::io::interval_union_from_json(read_json(path));
  auto show = [&](const qsets::IntervalUnion& v) {
    if (json)
      emit(qsets::io::to_json(v));
    else
      std::cout << qsets::to_string(v) << "\n";
  };
  if (op == "qcomp") {
    show(qsets::qcomp_interval(u));
  } else if (op == "closure") {
    show(qsets::closure_interval(u));
  } else if (op == "q1") {
    const bool q1 = qsets::is_Q1(u);
    if (json)
      emit({{"Q1", q1}});
    else
      std::cout << yes_no(q1) << "\n";
  } else {
    if (within.empty()) throw qsets::InputError("relclosure needs --within");
    auto t = qsets::io::interval_union_from_json(read_json(within));
    show(qsets::relative_closure_interval(t, u));
  }
  return kOk;
}

int arc(const std::string& path, const std::string& op, const std::string& other, bool json) {
  auto a = qsets::io::arc_from_json(read_json(path));
  auto show = [&](const qsets::ArcSet& v) {
    if (json)
      emit(qsets::io::to_json(v));
    else
      std::cout << qsets::to_string(v) << "\n";
  };
  if (op == "qcomp") {
    show(qsets::qcomp_arc(a));
    return kOk;
  }
  if (op == "closure") {
    show(qsets::qcomp_arc(qsets::qcomp_arc(a)));
    return kOk;
  }
  if (other.empty()) throw qsets::InputError(op + " needs --with");
  auto b = qsets::io::arc_from_json(read_json(other));
  if (op == "meet") {
    show(qsets::arc_meet(a, b));
  } else if (op == "join") {
    show(qsets::arc_join(a, b));
  } else {
    const bool c = qsets::arc_commutes(a, b);
    const bool qc = qsets::arc_qcommutes(a, b);
    if (json)
      emit({{"commutes", c}, {"qcommutes", qc}});
    else
      std::cout << "commutes:   " << yes_no(c) << "\nq-commutes: " << yes_no(qc) << "\n";
  }
  return kOk;
}

int topology(const std::string& path, bool quantum, bool dot, bool json) {
  auto j = read_json(path);
  if (quantum) {
    // Checked here rather than through QuantumTopology so that an axiom
    // failure is reported as a property failure, not an input error.
    if (!j.contains("quantum_set") || !j.contains("closed")) throw qsets::InputError("expected quantum_set and closed");
    auto x = qsets::io::quantum_set_from_json(j.at("quantum_set"));
    auto q = qsets::enumerate_qsubsets(x);
    std::vector<qsets::ElementSet> sets;
    for (const auto& s : j.at("closed")) {
      auto e = qsets::ElementSet::from_string(s.get<std::string>());
      if (e.width() != x.size()) throw qsets::InputError("closed: width mismatch in " + s.get<std::string>());
      sets.push_back(e);
    }
    auto verdict = qsets::verify_quantum_topology(q.lattice(), qsets::carrier_indices(q, sets));
    if (json)
      emit({{"quantum_topology", verdict.ok()}, {"message", verdict.message}});
    else
      std::cout << (verdict.ok() ? "quantum topology: yes" : "quantum topology: no: " + verdict.message) << "\n";
    return verdict.ok() ? kOk : kPropertyFailure;
  }
  auto t = qsets::io::topology_from_json(j);
  auto r = qsets::regular_open_lattice(t);
  if (dot && r.lattice) {
    std::cout << qsets::export_hasse(*r.lattice);
    return kOk;
  }
  const bool boolean = r.verdict.ok() && r.orthomodular && r.distributive;
  if (json) {
    Json sets = Json::array();
    for (const auto& s : r.sets) sets.push_back(s.to_string());
    emit({{"regular_open", sets},
          {"ortholattice", r.verdict.ok()},
          {"orthomodular", r.orthomodular},
          {"distributive", r.distributive},
          {"join_formula", r.join_matches_closure_formula}});
  } else {
    std::cout << "regular open sets: " << r.sets.size() << "\n"
              << "Boolean algebra:   " << yes_no(boolean) << "\n";
  }
  return boolean ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum sets, q-subset lattices and quantum topologies"};
  app.require_subcommand(1);

  std::string input = "-";
  std::size_t limit = qsets::kDefaultEnumerationLimit;
  bool dot = false;
  bool json = false;
  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "JSON input file ('-' for stdin)"); };

  auto* analyze_cmd = app.add_subcommand("analyze", "Properties of a quantum set");
  add_input(analyze_cmd);
  analyze_cmd->add_option("--limit", limit, "Maximum number of q-subsets to enumerate");
  analyze_cmd->add_flag("--json", json, "JSON output");

  auto* lattice_cmd = app.add_subcommand("lattice", "Enumerate Q(X)");
  add_input(lattice_cmd);
  lattice_cmd->add_option("--limit", limit, "Maximum number of q-subsets to enumerate");
  lattice_cmd->add_flag("--dot", dot, "Hasse diagram in DOT");
  lattice_cmd->add_flag("--json", json, "JSON output");

  auto* check_cmd = app.add_subcommand("check", "Ortholattice axioms and orthomodularity");
  add_input(check_cmd);
  check_cmd->add_flag("--dot", dot, "Hasse diagram in DOT");
  check_cmd->add_flag("--json", json, "JSON output");

  auto* complete_cmd = app.add_subcommand("complete", "Round trip L -> Q(L*)");
  add_input(complete_cmd);
  complete_cmd->add_flag("--json", json, "JSON output");

  std::string op;
  std::string other;
  auto* interval_cmd = app.add_subcommand("interval", "Real-line model");
  add_input(interval_cmd);
  interval_cmd->add_option("--op", op, "qcomp | closure | q1 | relclosure")
      ->required()
      ->check(CLI::IsMember({"qcomp", "closure", "q1", "relclosure"}));
  interval_cmd->add_option("--within", other, "Ambient set T for relclosure");
  interval_cmd->add_flag("--json", json, "JSON output");

  auto* arc_cmd = app.add_subcommand("arc", "Projective-line model");
  add_input(arc_cmd);
  arc_cmd->add_option("--op", op, "qcomp | closure | meet | join | commute")
      ->required()
      ->check(CLI::IsMember({"qcomp", "closure", "meet", "join", "commute"}));
  arc_cmd->add_option("--with", other, "Second arc for binary operations");
  arc_cmd->add_flag("--json", json, "JSON output");

  bool quantum = false;
  auto* topology_cmd = app.add_subcommand("topology", "Regular open algebra, or quantum topology axioms");
  add_input(topology_cmd);
  topology_cmd->add_flag("--quantum", quantum, "Input is a quantum topology; check S1-S3");
  topology_cmd->add_flag("--dot", dot, "Hasse diagram of the regular open algebra");
  topology_cmd->add_flag("--json", json, "JSON output");

  qsets::corpus::CorpusSpec spec;
  std::string out_path;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the verification corpus");
  corpus_cmd->add_option("--suite", spec.suites, "Suites to run (default: all)")
      ->check(CLI::IsMember(qsets::corpus::suite_names()));
  corpus_cmd->add_option("--seed", spec.seed, "Seed for the randomized suites");
  corpus_cmd->add_option("--min-n", spec.exhaustive_min_n, "Smallest exhaustive size");
  corpus_cmd->add_option("--max-n", spec.exhaustive_max_n, "Largest exhaustive size")->check(CLI::Range(0, 6));
  corpus_cmd->add_option("--random-cases", spec.random_cases, "Random quantum sets in the oracle suite");
  corpus_cmd->add_option("--topologies", spec.topology_samples, "Random topologies in the regular-open suite");
  corpus_cmd->add_flag("--timing", spec.timing, "Record wall-clock duration (breaks byte determinism)");
  corpus_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputFailure;
  }

  try {
    if (*analyze_cmd) return analyze(input, limit, json);
    if (*lattice_cmd) return lattice(input, limit, dot, json);
    if (*check_cmd) return check(input, dot, json);
    if (*complete_cmd) return complete(input, json);
    if (*interval_cmd) return interval(input, op, other, json);
    if (*arc_cmd) return arc(input, op, other, json);
    if (*topology_cmd) return topology(input, quantum, dot, json);
    if (*corpus_cmd) {
      std::string command;
      for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);
      auto report = qsets::corpus::run_corpus(spec, command);
      const auto bytes = report.serialize();
      if (out_path.empty()) {
        std::cout << bytes;
      } else {
        std::ofstream(out_path) << bytes;
        for (const auto& c : report.checks)
          std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name
                    << (c.passed ? "" : "  -- " + c.witness) << "\n";
      }
      return report.exit_status();
    }
  } catch (const qsets::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const qsets::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kInputFailure;
  } catch (const qsets::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kInputFailure;
  }
  return kOk;
}

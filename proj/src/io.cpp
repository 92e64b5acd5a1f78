#include "qsets/io.hpp"

#include <fstream>
#include <sstream>

#include "qsets/error.hpp"

namespace qsets::io {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) throw InputError(ctx + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(ctx + ": missing field \"" + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InputError(path + ": expected a string");
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto where = path + "[" + std::to_string(i) + "]";
    auto items = string_list(j[i], where);
    if (items.size() != 2) throw InputError(where + ": expected a pair");
    out.emplace_back(items[0], items[1]);
  }
  return out;
}

template <typename F>
auto with_context(const std::string& ctx, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(ctx + ": " + e.what());
  }
}

}  // namespace

InputKind parse_kind(std::string_view name) {
  if (name == "qset") return InputKind::QuantumSet;
  if (name == "lattice") return InputKind::OrthoLattice;
  if (name == "interval") return InputKind::IntervalUnion;
  if (name == "arc") return InputKind::Arc;
  if (name == "topology") return InputKind::Topology;
  if (name == "qtopology") return InputKind::QuantumTopology;
  throw InputError("unknown input kind \"" + std::string(name) + "\"");
}

std::string_view kind_name(InputKind kind) {
  switch (kind) {
    case InputKind::QuantumSet: return "qset";
    case InputKind::OrthoLattice: return "lattice";
    case InputKind::IntervalUnion: return "interval";
    case InputKind::Arc: return "arc";
    case InputKind::Topology: return "topology";
    case InputKind::QuantumTopology: return "qtopology";
  }
  return "unknown";
}

QuantumSet quantum_set_from_json(const Json& j) {
  auto labels = string_list(field(j, "elements", "quantum set"), "elements");
  std::vector<QuantumSet::LabelPair> pairs;
  if (j.contains("q_distinct")) pairs = pair_list(j["q_distinct"], "q_distinct");
  return with_context("q_distinct", [&] { return QuantumSet(std::move(labels), pairs); });
}

Json to_json(const QuantumSet& x) {
  Json pairs = Json::array();
  for (auto [i, k] : x.edges()) pairs.push_back({x.label(i), x.label(k)});
  return {{"elements", x.labels()}, {"q_distinct", pairs}};
}

RawOrthoPoset raw_lattice_from_json(const Json& j) {
  auto labels = string_list(field(j, "elements", "lattice"), "elements");
  std::vector<std::pair<std::string, std::string>> order;
  if (j.contains("covers")) order = pair_list(j["covers"], "covers");
  if (j.contains("leq")) {
    auto more = pair_list(j["leq"], "leq");
    order.insert(order.end(), more.begin(), more.end());
  }
  const auto& o = field(j, "ortho", "lattice");
  if (!o.is_object()) throw InputError("ortho: expected an object mapping elements to complements");
  std::map<std::string, std::string> ortho;
  for (auto it = o.begin(); it != o.end(); ++it) ortho[it.key()] = text(it.value(), "ortho." + it.key());
  return raw_from_covers(std::move(labels), order, ortho);
}

Json to_json(const OrthoLattice& l, bool with_tables) {
  Json covers = Json::array();
  for (auto [p, q] : l.covers()) covers.push_back({l.label(p), l.label(q)});
  Json ortho = Json::object();
  for (std::size_t p = 0; p < l.size(); ++p) ortho[l.label(p)] = l.label(l.ortho(p));
  Json out = {{"elements", l.labels()}, {"covers", covers}, {"ortho", ortho}};
  if (with_tables) {
    Json meet = Json::array(), join = Json::array();
    for (std::size_t p = 0; p < l.size(); ++p) {
      Json mrow = Json::array(), jrow = Json::array();
      for (std::size_t q = 0; q < l.size(); ++q) {
        mrow.push_back(l.label(l.meet(p, q)));
        jrow.push_back(l.label(l.join(p, q)));
      }
      meet.push_back(mrow);
      join.push_back(jrow);
    }
    out["meet"] = meet;
    out["join"] = join;
  }
  return out;
}

IntervalUnion interval_union_from_json(const Json& j) {
  auto delta = with_context("delta", [&] { return parse_rational(text(field(j, "delta", "interval union"), "delta")); });
  std::vector<Interval> ivs;
  for (const auto& [lo, hi] : pair_list(field(j, "intervals", "interval union"), "intervals"))
    ivs.push_back(with_context("intervals", [&] { return Interval{Endpoint::parse(lo), Endpoint::parse(hi)}; }));
  return with_context("intervals", [&] { return IntervalUnion(std::move(delta), std::move(ivs)); });
}

Json to_json(const IntervalUnion& u) {
  Json ivs = Json::array();
  for (const auto& iv : u.intervals()) ivs.push_back({to_string(iv.lo), to_string(iv.hi)});
  return {{"delta", to_string(u.delta())}, {"intervals", ivs}};
}

ArcSet arc_from_json(const Json& j) {
  auto kind = text(field(j, "kind", "arc"), "kind");
  if (kind == "empty") return ArcSet::empty();
  if (kind == "full") return ArcSet::full();
  if (kind != "arc") throw InputError("kind: expected \"arc\", \"full\" or \"empty\", got \"" + kind + "\"");
  auto start = with_context("start", [&] { return parse_rational(text(field(j, "start", "arc"), "start")); });
  auto length = with_context("length", [&] { return parse_rational(text(field(j, "length", "arc"), "length")); });
  return with_context("length", [&] { return ArcSet::arc(start, length); });
}

Json to_json(const ArcSet& a) {
  switch (a.kind()) {
    case ArcSet::Kind::Empty: return {{"kind", "empty"}};
    case ArcSet::Kind::Full: return {{"kind", "full"}};
    case ArcSet::Kind::Arc: break;
  }
  return {{"kind", "arc"}, {"start", to_string(a.start().theta())}, {"length", to_string(a.length())}};
}

FiniteTopology topology_from_json(const Json& j) {
  auto points = string_list(field(j, "points", "topology"), "points");
  const auto& opens_json = field(j, "opens", "topology");
  if (!opens_json.is_array()) throw InputError("opens: expected an array");
  std::vector<ElementSet> opens;
  for (std::size_t i = 0; i < opens_json.size(); ++i) {
    auto where = "opens[" + std::to_string(i) + "]";
    ElementSet s(points.size());
    for (const auto& m : string_list(opens_json[i], where)) {
      auto it = std::find(points.begin(), points.end(), m);
      if (it == points.end()) throw InputError(where + ": unknown point \"" + m + "\"");
      s.set(static_cast<std::size_t>(it - points.begin()));
    }
    opens.push_back(std::move(s));
  }
  return with_context("opens", [&] { return FiniteTopology(std::move(points), std::move(opens)); });
}

Json to_json(const FiniteTopology& t) {
  Json opens = Json::array();
  for (const auto& o : t.opens()) {
    Json members = Json::array();
    for (auto i : o.members()) members.push_back(t.points()[i]);
    opens.push_back(members);
  }
  return {{"points", t.points()}, {"opens", opens}};
}

QuantumTopology quantum_topology_from_json(const Json& j) {
  auto x = with_context("quantum_set", [&] { return quantum_set_from_json(field(j, "quantum_set", "quantum topology")); });
  std::vector<ElementSet> closed;
  for (const auto& bits : string_list(field(j, "closed", "quantum topology"), "closed")) {
    auto s = with_context("closed", [&] { return ElementSet::from_string(bits); });
    if (s.width() != x.size()) throw InputError("closed: bit-string \"" + bits + "\" has the wrong width");
    closed.push_back(std::move(s));
  }
  return with_context("closed", [&] { return QuantumTopology(enumerate_qsubsets(x), closed); });
}

Json to_json(const QuantumTopology& t) {
  Json closed = Json::array();
  for (const auto& c : t.closed_sets()) closed.push_back(c.to_string());
  return {{"quantum_set", to_json(t.carrier().parent())}, {"closed", closed}};
}

Json lattice_report(const QSubsetLattice& q) {
  const auto& l = q.lattice();
  Json closed = Json::array(), atoms = Json::array(), names = Json::array();
  for (const auto& s : q.closed_sets()) {
    closed.push_back(s.to_string());
    names.push_back(describe(q.parent(), s));
  }
  for (auto a : l.atoms()) atoms.push_back(q[a].to_string());
  return {{"closed_sets", closed},
          {"closed_set_members", names},
          {"atoms", atoms},
          {"properties",
           {{"atomic", is_atomic(q.parent())},
            {"hereditary", is_hereditary(q)},
            {"orthomodular", is_orthomodular(l).orthomodular}}}};
}

Parsed parse_json(const Json& j, InputKind kind) {
  switch (kind) {
    case InputKind::QuantumSet: return quantum_set_from_json(j);
    case InputKind::OrthoLattice: return OrthoLattice::from_raw(raw_lattice_from_json(j));
    case InputKind::IntervalUnion: return interval_union_from_json(j);
    case InputKind::Arc: return arc_from_json(j);
    case InputKind::Topology: return topology_from_json(j);
    case InputKind::QuantumTopology: return quantum_topology_from_json(j);
  }
  throw InputError("unknown input kind");
}

Parsed parse_input(std::istream& in, InputKind kind) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_json(j, kind);
}

Parsed parse_input(const std::filesystem::path& path, InputKind kind) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_input(in, kind);
}

}  // namespace qsets::io

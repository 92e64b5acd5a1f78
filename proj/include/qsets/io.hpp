#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "qsets/arc.hpp"
#include "qsets/interval_union.hpp"
#include "qsets/ortholattice.hpp"
#include "qsets/qsubsets.hpp"
#include "qsets/quantum_set.hpp"
#include "qsets/topology.hpp"

namespace qsets::io {

using Json = nlohmann::json;

enum class InputKind { QuantumSet, OrthoLattice, IntervalUnion, Arc, Topology, QuantumTopology };

/// "qset", "lattice", "interval", "arc", "topology", "qtopology".
InputKind parse_kind(std::string_view name);
std::string_view kind_name(InputKind kind);

// {"elements": [...], "q_distinct": [[a, b], ...]}
QuantumSet quantum_set_from_json(const Json& j);
Json to_json(const QuantumSet& x);

// {"elements": [...], "covers" | "leq": [[lo, hi], ...], "ortho": {p: p'}}
RawOrthoPoset raw_lattice_from_json(const Json& j);
Json to_json(const OrthoLattice& l, bool with_tables = false);

// {"delta": "1", "intervals": [["-inf", "-1"], ["3/2", "inf"]]}
IntervalUnion interval_union_from_json(const Json& j);
Json to_json(const IntervalUnion& u);

// {"kind": "arc", "start": "0", "length": "1/2"} | {"kind": "full"} | {"kind": "empty"}
ArcSet arc_from_json(const Json& j);
Json to_json(const ArcSet& a);

// {"points": [...], "opens": [[...], ...]}
FiniteTopology topology_from_json(const Json& j);
Json to_json(const FiniteTopology& t);

// {"quantum_set": {...}, "closed": ["0101", ...]}
QuantumTopology quantum_topology_from_json(const Json& j);
Json to_json(const QuantumTopology& t);

/// {"closed_sets": [...], "atoms": [...], "properties": {...}}; the
/// properties need the materialized lattice.
Json lattice_report(const QSubsetLattice& q);

using Parsed = std::variant<QuantumSet, OrthoLattice, IntervalUnion, ArcSet, FiniteTopology, QuantumTopology>;

/// Reads and validates one value. Throws InputError naming the offending
/// field on malformed JSON or invariant violations.
Parsed parse_input(std::istream& in, InputKind kind);
Parsed parse_input(const std::filesystem::path& path, InputKind kind);
Parsed parse_json(const Json& j, InputKind kind);

}  // namespace qsets::io

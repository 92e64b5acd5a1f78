#pragma once

#include <string>

#include "qsets/ortholattice.hpp"
#include "qsets/qsubsets.hpp"

namespace qsets {

/// Hasse diagram as a DOT digraph, bottom to top. Nodes appear in element
/// order and carry their orthocomplement as a tooltip; one edge per cover.
std::string export_hasse(const OrthoLattice& l);
/// Same, with Q(X) members labelled by their elements ("{1,3}").
std::string export_hasse(const QSubsetLattice& q);

}  // namespace qsets

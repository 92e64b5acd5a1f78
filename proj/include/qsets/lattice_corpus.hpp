#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsets/ortholattice.hpp"

namespace qsets::lattices {

/// Power set of {1..n}; labels "{}", "{1}", "{1,2}", ...
RawOrthoPoset boolean_raw(std::size_t n);
OrthoLattice boolean(std::size_t n);

/// 0, 1 and k incomparable complementary pairs a/a', b/b', ...
OrthoLattice mo(std::size_t k);

/// Benzene ring: 0 < a < b < 1, 0 < b' < a' < 1.
OrthoLattice o6();

/// Chain 0 < c1 < ... < 1 with complement i ↦ n-1-i. Only n ≤ 2 verifies;
/// longer chains are useful as negative inputs.
RawOrthoPoset chain_raw(std::size_t n);
OrthoLattice chain(std::size_t n);

struct NamedLattice {
  std::string name;
  OrthoLattice lattice;
};

/// B0..B5, MO1..MO6, O6, chain1, chain2.
std::vector<NamedLattice> standard_corpus();

}  // namespace qsets::lattices

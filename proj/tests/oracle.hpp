#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond reading the q-distinctness relation of a QuantumSet.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qsets/element_set.hpp"
#include "qsets/quantum_set.hpp"

namespace oracle {

using Bits = std::vector<bool>;

struct Graph {
  std::size_t n = 0;
  std::vector<Bits> adj;
};

inline Graph graph_of(const qsets::QuantumSet& x) {
  Graph g{x.size(), std::vector<Bits>(x.size(), Bits(x.size(), false))};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) g.adj[i][j] = x.q_distinct(i, j);
  return g;
}

inline Bits perp(const Graph& g, const Bits& d) {
  Bits out(g.n, false);
  for (std::size_t x = 0; x < g.n; ++x) {
    bool all = true;
    for (std::size_t y = 0; y < g.n; ++y)
      if (d[y] && !g.adj[x][y]) all = false;
    out[x] = all;
  }
  return out;
}

inline Bits closure(const Graph& g, const Bits& d) { return perp(g, perp(g, d)); }

inline Bits from_mask(std::size_t n, std::uint64_t m) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (m >> i) & 1U;
  return b;
}

inline Bits to_bits(const qsets::ElementSet& s) {
  Bits b(s.width());
  for (std::size_t i = 0; i < s.width(); ++i) b[i] = s.test(i);
  return b;
}

inline qsets::ElementSet to_set(const Bits& b) {
  qsets::ElementSet s(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) s |= qsets::ElementSet(b.size(), {i});
  return s;
}

/// Every fixed point of the double complement, found by trying all 2^n sets.
inline std::vector<Bits> all_closed(const Graph& g) {
  std::vector<Bits> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
    auto d = from_mask(g.n, m);
    if (closure(g, d) == d) out.push_back(d);
  }
  return out;
}

/// Lectic comparison: at the first differing position, b holds the element.
inline bool lectic_less(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return b[i];
  return false;
}

inline bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace oracle

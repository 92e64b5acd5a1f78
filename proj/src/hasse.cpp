#include "qsets/hasse.hpp"

#include <sstream>
#include <vector>

namespace qsets {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render(const OrthoLattice& l, const std::vector<std::string>& names) {
  std::ostringstream dot;
  dot << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t p = 0; p < l.size(); ++p)
    dot << "  n" << p << " [label=" << quoted(names[p]) << ", tooltip=" << quoted("′ = " + names[l.ortho(p)])
        << "];\n";
  for (auto [p, q] : l.covers()) dot << "  n" << p << " -> n" << q << ";\n";
  dot << "}\n";
  return dot.str();
}

}  // namespace

std::string export_hasse(const OrthoLattice& l) { return render(l, l.labels()); }

std::string export_hasse(const QSubsetLattice& q) {
  std::vector<std::string> names;
  for (const auto& s : q.closed_sets()) names.push_back(describe(q.parent(), s));
  return render(q.lattice(), names);
}

}  // namespace qsets

#include "qsets/lattice_corpus.hpp"

#include "qsets/error.hpp"

namespace qsets::lattices {

RawOrthoPoset boolean_raw(std::size_t n) {
  if (n > 10) throw InputError("boolean lattice generator supports n ≤ 10");
  const std::size_t size = std::size_t{1} << n;
  RawOrthoPoset raw;
  for (std::size_t m = 0; m < size; ++m) {
    std::string label = "{";
    for (std::size_t b = 0; b < n; ++b)
      if ((m >> b) & 1U) label += (label.size() > 1 ? "," : "") + std::to_string(b + 1);
    raw.labels.push_back(label + "}");
  }
  raw.leq.assign(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) raw.leq[a][b] = (a & ~b) == 0;
    raw.ortho.push_back(~a & (size - 1));
  }
  return raw;
}

OrthoLattice boolean(std::size_t n) { return OrthoLattice::from_raw(boolean_raw(n)); }

OrthoLattice mo(std::size_t k) {
  if (k > 26) throw InputError("MO_k generator supports k ≤ 26");
  std::vector<std::string> labels{"0"};
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::string> ortho;
  for (std::size_t i = 0; i < k; ++i) {
    std::string a(1, static_cast<char>('a' + i));
    labels.push_back(a);
    labels.push_back(a + "'");
    for (const auto& e : {a, a + "'"}) {
      covers.emplace_back("0", e);
      covers.emplace_back(e, "1");
    }
    ortho[a] = a + "'";
  }
  labels.push_back("1");
  if (k == 0) covers.emplace_back("0", "1");
  return OrthoLattice::from_raw(raw_from_covers(labels, covers, ortho));
}

OrthoLattice o6() {
  return OrthoLattice::from_raw(raw_from_covers({"0", "a", "b", "b'", "a'", "1"},
                                                {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}},
                                                {{"a", "a'"}, {"b", "b'"}}));
}

RawOrthoPoset chain_raw(std::size_t n) {
  RawOrthoPoset raw;
  for (std::size_t i = 0; i < n; ++i)
    raw.labels.push_back(i == 0 ? "0" : i + 1 == n ? "1" : "c" + std::to_string(i));
  raw.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) raw.leq[i][j] = true;
    raw.ortho.push_back(n - 1 - i);
  }
  return raw;
}

OrthoLattice chain(std::size_t n) { return OrthoLattice::from_raw(chain_raw(n)); }

std::vector<NamedLattice> standard_corpus() {
  std::vector<NamedLattice> out;
  for (std::size_t n = 0; n <= 5; ++n) out.push_back({"B" + std::to_string(n), boolean(n)});
  for (std::size_t k = 1; k <= 6; ++k) out.push_back({"MO" + std::to_string(k), mo(k)});
  out.push_back({"O6", o6()});
  out.push_back({"chain1", chain(1)});
  out.push_back({"chain2", chain(2)});
  return out;
}

}  // namespace qsets::lattices

#pragma once

// Closed-form homology of the weighted boundary model: Z in degree 0,
// Z/c_ij in degree d_ij - 1 for each pair, Z in degree d123 - 1, and no free
// part in degree d123 - 2, where the torsion is left unconstrained.

#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wsp/chain.hpp"
#include "wsp/ring.hpp"

namespace expected {

using wsp::Int;
using wsp::IntVector;

// Invariant factors > 1 of the diagonal group with the given orders.
inline IntVector normalizeTorsion(const IntVector& orders) {
  wsp::IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  IntVector out;
  for (const auto& x : oracle::invariantFactors(diag))
    if (x > 1) out.push_back(x);
  return out;
}

inline std::string show(const IntVector& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "]";
  return s.str();
}

// Empty string on agreement, otherwise a description of the first mismatch.
inline std::string closedFormMismatch(const wsp::HomologyResult& h, const wsp::Degrees& d,
                                      const wsp::CoefficientSequence& c) {
  const int top = d[0] + d[1] + d[2];
  for (std::size_t un = 0; un < h.degrees.size(); ++un) {
    const int n = static_cast<int>(un);
    const auto& g = h.degrees[un];
    const std::size_t wantFree = (n == 0 ? 1u : 0u) + (n == top - 1 ? 1u : 0u);
    if (g.freeRank != wantFree)
      return "degree " + std::to_string(n) + ": free rank " + std::to_string(g.freeRank) +
             ", want " + std::to_string(wantFree);
    if (n == top - 2) continue;
    IntVector orders;
    for (wsp::Subset s : {0b011u, 0b101u, 0b110u})
      if (wsp::subsetDegree(s, d) - 1 == n) orders.push_back(c[s]);
    const IntVector want = normalizeTorsion(orders);
    if (g.torsion != want)
      return "degree " + std::to_string(n) + ": torsion " + show(g.torsion) + ", want " +
             show(want);
  }
  if (static_cast<int>(h.degrees.size()) < top) return "complex stops below degree d123 - 1";
  return "";
}

}  // namespace expected

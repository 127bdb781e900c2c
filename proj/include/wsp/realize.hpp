#pragma once

// Cohomology-level arithmetic of the space X(c, d): the ring of the weighted
// polyhedral product over the full 2-simplex, and the cofiber chase that
// rescales its top product to c123.

#include <vector>

#include "wsp/ring.hpp"

namespace wsp {

/// k^kExponent * coeff for an unknown positive integer k.
struct KMonomial {
  int kExponent = 0;
  Rat coeff = 0;

  friend KMonomial operator*(const KMonomial& a, const KMonomial& b) {
    return {a.kExponent + b.kExponent, a.coeff * b.coeff};
  }
  friend KMonomial operator/(const KMonomial& a, const KMonomial& b) {
    if (b.coeff == 0) throw Error(ErrorKind::Internal, "division by zero multiplier");
    return {a.kExponent - b.kExponent, a.coeff / b.coeff};
  }
};

struct LesReport {
  int topDegree = 0;
  /// d_sigma for the proper subsets sigma.
  std::vector<int> properDegrees;
  bool vanishing = false;
  /// Multiplier on top cohomology from the full-simplex product to X'.
  KMonomial upper;
  /// Multiplier on top cohomology from X to X'.
  KMonomial lower;
  /// a1 a2 a3 in the full-simplex product, X' and X respectively.
  KMonomial productInProduct;
  KMonomial productInXPrime;
  KMonomial productInX;
  bool kIndependent = false;
};

/// Runs the top-degree chase. Throws DegreeTooSmall when the cohomology of
/// the boundary product does not vanish in degrees d123-1 and d123, and
/// Internal if k fails to cancel.
LesReport lesTopDegreeCheck(const CoefficientSequence& c, const Degrees& d);

/// Ring of the weighted polyhedral product over the full simplex:
/// a_i a_j = +-c_ij a_ij and a1 a2 a3 = c12 c23 c13 a123.
StructRing ringOfWeightedProduct(const CoefficientSequence& c, const Degrees& d);

struct Provenance {
  Int lcm;
  Int etaMultiplier;
  Int attachingMultiplier;
  Int topConstant;
};

struct RealizedRing {
  StructRing ring;
  Provenance provenance;
  LesReport chase;
  /// Identity-on-labels witness against buildWeightedRing passed.
  bool witnessVerified = false;
};

RealizedRing realizeRing(const CoefficientSequence& c, const Degrees& d);

}  // namespace wsp

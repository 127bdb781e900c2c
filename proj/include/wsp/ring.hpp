#pragma once

// Graded rings with a homogeneous Z-basis and exact structure constants, and
// the weighted sphere-product rings A(c, d) on three generators.

#include <array>
#include <string>
#include <vector>

#include "wsp/linalg.hpp"

namespace wsp {

/// Subset of {1,2,3} as a bit mask: bit i-1 set iff i is a member.
using Subset = unsigned;
inline constexpr Subset kFullSet = 0b111;

using Degrees = std::array<int, 3>;

int subsetSize(Subset s);
/// d_sigma = sum of d_i over i in sigma.
int subsetDegree(Subset s, const Degrees& d);
/// Sorted digit string, "" for the empty set: {1,3} -> "13".
std::string subsetDigits(Subset s);
/// Inverse of subsetDigits; throws InvalidInput.
Subset subsetFromDigits(const std::string& digits);
/// All eight subsets ordered by (d_sigma, mask).
std::vector<Subset> subsetsByDegree(const Degrees& d);

/// Sign of a_sigma * a_tau relative to a_{sigma u tau}. Throws
/// OverlappingSubsets if the subsets meet.
int signOfProduct(Subset sigma, Subset tau, const Degrees& d);

class CoefficientSequence {
 public:
  /// All ones.
  CoefficientSequence();
  /// Validates positivity and the divisibility law; throws
  /// InvalidCoefficientSequence.
  CoefficientSequence(Int c12, Int c13, Int c23, Int c123);

  const Int& operator[](Subset s) const { return c_[s]; }
  const Int& c12() const { return c_[0b011]; }
  const Int& c13() const { return c_[0b101]; }
  const Int& c23() const { return c_[0b110]; }
  const Int& c123() const { return c_[0b111]; }
  /// lcm(c12, c13, c23).
  Int pairLcm() const;

  friend bool operator==(const CoefficientSequence& a, const CoefficientSequence& b) {
    return a.c_ == b.c_;
  }

 private:
  std::array<Int, 8> c_;
};

/// Finitely generated free graded ring with a distinguished homogeneous basis.
/// mult[i][j] holds the coordinates of b_i * b_j.
struct StructRing {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<std::vector<RatVector>> mult;
  std::size_t unit = 0;

  std::size_t size() const noexcept { return labels.size(); }
  RatVector basisVector(std::size_t i) const;
  RatVector multiply(const RatVector& a, const RatVector& b) const;
};

/// A(c, d) on the basis a_sigma, ordered by (d_sigma, mask). Labels are "1"
/// and "a" followed by the subset digits.
StructRing buildWeightedRing(const CoefficientSequence& c, const Degrees& d);

/// Index of a_sigma in a ring built by buildWeightedRing.
std::size_t weightedIndex(Subset sigma, const Degrees& d);

struct RingAxiomReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive associativity, unit, degree-additivity and graded
/// commutativity check on basis elements.
RingAxiomReport verifyRingAxioms(const StructRing& ring);

/// Column j of `map` is the image of source basis element j in target
/// coordinates.
struct RingMapWitness {
  RatMatrix matrix;
};

/// True iff the map is unital, degree preserving, multiplicative and
/// unimodular in every degree. Throws DimensionMismatch on shape errors.
bool checkRingMap(const RingMapWitness& f, const StructRing& src, const StructRing& dst);

}  // namespace wsp

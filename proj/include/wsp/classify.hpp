#pragma once

// Orders in the sphere-product algebra R = Q[x1,x2,x3]/(x_i^2): validation,
// the filtration decomposition A = Z + L(1) + L(2) + L(3), and classification
// into weighted sphere-product rings.
//
// Vectors in R use the monomial basis indexed by subset mask: coordinate s
// is the coefficient of x_s, the product of x_i over i in s in ascending order.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wsp/ring.hpp"

namespace wsp {

struct OrderInput {
  Degrees d{};
  /// Eight homogeneous vectors of length 8.
  std::vector<RatVector> gens;
  /// Display names of x1, x2, x3 in reports.
  std::array<std::string, 3> names{"x1", "x2", "x3"};
};

/// Product in R of two mask-indexed vectors.
RatVector multiplyInR(const RatVector& a, const RatVector& b, const Degrees& d);
/// Degree of a nonzero homogeneous vector; nullopt if zero or inhomogeneous.
std::optional<int> homogeneousDegree(const RatVector& v, const Degrees& d);
/// Human-readable form such as "1/2*x2x3 + x1".
std::string formatElement(const RatVector& v, const std::array<std::string, 3>& names);

struct VerifiedOrder {
  /// Input with a degree-0 generator of -1 replaced by 1.
  OrderInput input;
  std::vector<int> degrees;
  /// A in its own basis: label "g<k>" for generator k.
  StructRing ring;
  Lattice lattice;
};

/// Throws InvalidInput (malformed or inhomogeneous input), WrongRank,
/// NotUnital or NotClosed.
VerifiedOrder verifyOrder(const OrderInput& in);

struct Decomposition {
  RatVector unit;
  /// Bases sorted by degree; the matching degree lists are alongside.
  Lattice l1, l2, l3;
  std::vector<int> l1Degrees, l2Degrees, l3Degrees;
};

Decomposition decompose(const OrderInput& in);

struct CandidateFamily {
  std::vector<int> positions;
  int degree = 0;
  std::vector<RatVector> candidates;
  /// True when square-zero forces the candidates up to sign.
  bool pinned = false;
};

struct CandidateTrial {
  std::array<RatVector, 3> basis;
  /// First degree whose piece is not spanned by the multiples; nullopt when
  /// the trial was rejected earlier or succeeded.
  std::optional<int> failingDegree;
  std::string reason;
};

struct SearchReport {
  std::vector<CandidateFamily> families;
  std::vector<CandidateTrial> trials;
  std::size_t tested = 0;
  bool capped = false;
  std::string note;
};

enum class Outcome { Weighted, NotWeightedCertified, Inconclusive };

std::string_view toString(Outcome o);

struct ClassificationResult {
  Outcome outcome = Outcome::Inconclusive;
  /// "all-equal", "two-equal", "distinct", "square-zero-lift" or "search".
  std::string method;
  std::optional<CoefficientSequence> c;
  /// From buildWeightedRing(c, d) to the order in its generator basis.
  std::optional<RingMapWitness> witness;
  /// Chosen y1, y2, y3 in R.
  std::vector<RatVector> basis;
  SearchReport report;
};

inline constexpr int kDefaultHeightBound = 8;

ClassificationResult classifyOrder(const OrderInput& in, int heightBound = kDefaultHeightBound);

ClassificationResult notWeightedSearch(const OrderInput& in,
                                       int heightBound = kDefaultHeightBound);

/// The order generated by a_sigma = x_sigma / c_sigma.
OrderInput weightedOrder(const CoefficientSequence& c, const Degrees& d);

}  // namespace wsp

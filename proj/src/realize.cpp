#include "wsp/realize.hpp"

#include <algorithm>

namespace wsp {

namespace {

void requireDegrees(const Degrees& d) {
  for (int i = 0; i < 3; ++i)
    if (d[i] < 2)
      throw Error(ErrorKind::DegreeTooSmall,
                  "d" + std::to_string(i + 1) + " = " + std::to_string(d[i]) + " < 2");
}

Int pairProduct(const CoefficientSequence& c) { return c.c12() * c.c13() * c.c23(); }

}  // namespace

LesReport lesTopDegreeCheck(const CoefficientSequence& c, const Degrees& d) {
  LesReport r;
  r.topDegree = d[0] + d[1] + d[2];
  for (Subset s = 0; s < kFullSet; ++s) r.properDegrees.push_back(subsetDegree(s, d));
  std::sort(r.properDegrees.begin(), r.properDegrees.end());
  r.vanishing = std::none_of(r.properDegrees.begin(), r.properDegrees.end(),
                             [&](int n) { return n == r.topDegree - 1 || n == r.topDegree; });
  if (!r.vanishing)
    throw Error(ErrorKind::DegreeTooSmall,
                "boundary product has cohomology in degree d123-1 or d123");

  const Int l = c.pairLcm();
  const Int p = pairProduct(c);
  if (!mpz_divisible_p(c.c123().get_mpz_t(), l.get_mpz_t()))
    throw Error(ErrorKind::Internal, "lcm of the pair coefficients does not divide c123");
  r.upper = {1, Rat(c.c123(), l)};
  r.lower = {1, Rat(p, l)};
  r.upper.coeff.canonicalize();
  r.lower.coeff.canonicalize();
  r.productInProduct = {0, Rat(p)};
  r.productInXPrime = r.productInProduct * r.upper;
  r.productInX = r.productInXPrime / r.lower;
  r.kIndependent = r.productInX.kExponent == 0;
  if (!r.kIndependent) throw Error(ErrorKind::Internal, "unknown multiplier k does not cancel");
  if (r.productInX.coeff != Rat(c.c123()))
    throw Error(ErrorKind::Internal, "chase does not reproduce c123");
  return r;
}

StructRing ringOfWeightedProduct(const CoefficientSequence& c, const Degrees& d) {
  requireDegrees(d);
  return buildWeightedRing(CoefficientSequence(c.c12(), c.c13(), c.c23(), pairProduct(c)), d);
}

RealizedRing realizeRing(const CoefficientSequence& c, const Degrees& d) {
  requireDegrees(d);
  RealizedRing out;
  out.chase = lesTopDegreeCheck(c, d);
  out.ring = ringOfWeightedProduct(c, d);

  const Int p = pairProduct(c);
  const Int l = c.pairLcm();
  out.provenance = {l, p / l, c.c123() / l, out.chase.productInX.coeff.get_num()};

  // Rescale every product landing on a123 from p to the chased constant.
  const Rat scale = out.chase.productInX.coeff / Rat(p);
  const std::size_t top = weightedIndex(kFullSet, d);
  for (Subset s = 1; s < kFullSet; ++s) {
    const Subset t = kFullSet & ~s;
    auto& entry = out.ring.mult[weightedIndex(s, d)][weightedIndex(t, d)][top];
    entry *= scale;
  }

  const StructRing reference = buildWeightedRing(c, d);
  out.witnessVerified =
      checkRingMap({RatMatrix::identity(out.ring.size())}, out.ring, reference) &&
      out.ring.labels == reference.labels && out.ring.degrees == reference.degrees;
  if (!out.witnessVerified)
    throw Error(ErrorKind::Internal, "realized ring is not A(c, d) under the identity");
  return out;
}

}  // namespace wsp

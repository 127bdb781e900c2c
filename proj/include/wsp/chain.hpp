#pragma once

// Finitely generated free Z-chain complexes concentrated in degrees
// 0..top, chain maps, and integral homology with explicit generators.

#include <string>
#include <vector>

#include "wsp/linalg.hpp"

namespace wsp {

struct ChainComplex {
  /// labels[n] names the generators of C_n.
  std::vector<std::vector<std::string>> labels;
  /// boundary[n] : C_n -> C_{n-1} (rows = rank C_{n-1}); boundary[0] has
  /// zero rows.
  std::vector<IntMatrix> boundary;

  ChainComplex() = default;
  /// Empty complex in degrees 0..top.
  explicit ChainComplex(int top);

  int top() const noexcept { return static_cast<int>(labels.size()) - 1; }
  std::size_t rank(int n) const;
  /// Appends a generator in degree n with zero boundary and returns its index.
  std::size_t addGenerator(int n, std::string label);
  /// Index of the generator with this label in degree n; throws InvalidInput.
  std::size_t indexOf(int n, const std::string& label) const;
  /// Boundary matrix C_n -> C_{n-1} with empty shapes outside 0..top.
  IntMatrix d(int n) const;
  /// Throws NotAComplex unless every d_{n-1} d_n vanishes and shapes agree.
  void validate() const;
};

/// Degree-0 chain map source -> target given by f[n] : C_n -> D_n.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::vector<IntMatrix> f;

  IntMatrix at(int n) const;
  /// Throws NotAComplex if the squares fail to commute.
  void validate() const;
};

ChainMap identityMap(const ChainComplex& c);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainComplex directSum(const ChainComplex& a, const ChainComplex& b);

/// Homology in one degree. Generators are ordered torsion first (in
/// divisibility order) and then free.
struct HomologyGroup {
  std::size_t freeRank = 0;
  IntVector torsion;
  /// One cycle per generator, reduced modulo boundaries.
  std::vector<IntVector> representatives;
  std::size_t generatorCount() const { return torsion.size() + freeRank; }
};

/// Per-degree homology data, including what is needed to express arbitrary
/// cycles in the chosen generators.
class HomologyDegree {
 public:
  HomologyDegree(const ChainComplex& c, int n);

  const HomologyGroup& group() const noexcept { return group_; }
  /// Coordinates of the class of a cycle; torsion coordinates are reduced
  /// into [0, order). Throws NotACycle.
  IntVector classOf(const IntVector& cycle) const;
  bool isBoundary(const IntVector& chain) const;
  IntVector reduceModBoundaries(IntVector v) const;

 private:
  IntMatrix dn_;
  IntMatrix vInverse_;
  IntMatrix p_;
  IntMatrix boundaryHnf_;
  std::size_t rank_ = 0;
  std::size_t trivial_ = 0;
  HomologyGroup group_;
};

struct HomologyResult {
  std::vector<HomologyGroup> degrees;
};

/// Throws NotAComplex when the input is not a complex.
HomologyResult homology(const ChainComplex& c);

/// Matrix of H_n(f) in the engine's generators: column j is the class of
/// f(source generator j).
IntMatrix inducedOnHomology(const ChainMap& f, int n);

/// Same, but with the free part of H_n expressed in caller-chosen cycles.
/// srcBasis and dstBasis must be cycles whose classes form bases of the free
/// quotients; returns the matrix of f on those bases modulo torsion.
IntMatrix inducedOnFreeHomology(const ChainMap& f, int n, const std::vector<IntVector>& srcBasis,
                                const std::vector<IntVector>& dstBasis);

struct PushoutResult {
  ChainComplex complex;
  ChainMap fromX;
  ChainMap fromY;
};

/// Pushout of X <-i- A -j-> Y, presented on the basis of Y followed by a
/// complement of i(A) in X. Throws NotSplitInclusion when coker i has
/// torsion or i is not injective.
PushoutResult pushoutComplex(const ChainMap& i, const ChainMap& j);

/// target with one extra generator e in degree n+1, d e = m * cycle.
ChainComplex mappingConeOfDegreeMap(int n, const Int& m, const ChainComplex& target,
                                    const IntVector& cycle, const std::string& label = "e");

/// Complex with one generator in degree 0 and one in degree k, zero boundary.
ChainComplex sphereComplex(int k);

}  // namespace wsp

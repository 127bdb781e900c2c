#pragma once

// Cellular chain models of the three-factor weighted polyhedral products
// (CS, S)^{K,c} for K inside the boundary of the 2-simplex.
//
// A cell is a tensor word a1.a2.a3 with a_i in {1, x_i, y_i}, |x_i| = d_i - 1,
// |y_i| = d_i and d y_i = x_i. The weighted complex for the whole boundary
// adds the cells z12, z12.x3, z23, x1.z23, z13, z13~x2 standing for the
// words with two y's.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wsp/chain.hpp"
#include "wsp/ring.hpp"

namespace wsp {

/// c[face][i] for face a subset mask and i in 0..2.
struct PowerSequence3 {
  std::array<std::array<Int, 3>, 8> c;

  /// Phi(c)_sigma = prod_i c^sigma_i.
  Int phi(Subset face) const;
};

PowerSequence3 powerSequenceFromCoefficients(const CoefficientSequence& c);

/// Letters of a word: '1', 'x' or 'y' per coordinate.
using Word = std::array<char, 3>;

/// Degree of a word.
int wordDegree(const Word& w, const Degrees& d);
/// Cell label of a word: the nonunit factors joined by '.', e.g. "x1.y2";
/// the words with two y's get their z names.
std::string wordLabel(const Word& w);
/// Koszul differential of a word with coefficients in Z.
std::vector<std::pair<Word, int>> koszulBoundary(const Word& w, const Degrees& d);

/// The 20 words with at most one y, in listing order.
std::vector<Word> vertexWords();
/// The 6 words with exactly two y's, in the order z12, z12.x3, z23, x1.z23,
/// z13, z13~x2.
std::vector<Word> edgeWords();

/// Full weighted model of (CS, S)^{boundary of the 2-simplex, c}: 26 cells.
/// Throws DegreeTooSmall if some d_i < 2.
ChainComplex buildBoundaryComplex(const Degrees& d, const CoefficientSequence& c);

/// Chain model of the vertex part (at most one y per word): 20 cells.
ChainComplex buildVertexComplex(const Degrees& d);

/// The same complex assembled by three pushouts of vertex-level complexes
/// along eta(boundary of each edge), relabeled and reordered to match
/// buildBoundaryComplex.
ChainComplex buildBoundaryComplexByPushouts(const Degrees& d, const CoefficientSequence& c);

/// The square attaching an edge {p,q} with third index r: i includes the
/// words of the edge boundary into CS_p x CS_q x S_r, and j is
/// eta(boundary of the edge) into the vertex complex.
std::pair<ChainMap, ChainMap> edgeSquare(Subset edge, const Degrees& d,
                                         const CoefficientSequence& c);

/// eta from the unweighted complex (c = 1) to the weighted one.
ChainMap buildEtaChainMap(const Degrees& d, const CoefficientSequence& c);

struct TopGenerators {
  int degree = 0;
  /// Cycle in the unweighted complex.
  IntVector u;
  /// Cycle in the weighted complex.
  IntVector v;
};

TopGenerators topGenerators(const Degrees& d, const CoefficientSequence& c);

}  // namespace wsp

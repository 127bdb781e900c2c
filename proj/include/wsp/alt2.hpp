#pragma once

// Alternating square of 3x3 integer matrices on the basis
// (e1^e2, e1^e3, e2^e3), and a section of Alt^2 : GL(3,Z) -> SL(3,Z).

#include <vector>

#include "wsp/linalg.hpp"

namespace wsp {

/// Entry ({i<j}, {k<l}) is the minor g_ik g_jl - g_il g_jk.
IntMatrix alt2(const IntMatrix& g);

/// Identity plus `a` at (row, col), row != col, 0-based.
struct Elementary {
  int row = 0;
  int col = 1;
  Int a = 0;

  IntMatrix matrix() const;
  friend bool operator==(const Elementary&, const Elementary&) = default;
};

/// Elementary factors whose left-to-right product is m. Throws NotSL unless
/// m is 3x3 with determinant 1.
std::vector<Elementary> elementaryFactorization(const IntMatrix& m);

IntMatrix product(const std::vector<Elementary>& factors);

/// An elementary matrix whose alternating square is e.
Elementary alt2Preimage(const Elementary& e);

/// Y with alt2(Y) = m. Throws NotSL unless det m = 1.
IntMatrix alt2Section(const IntMatrix& m);

}  // namespace wsp

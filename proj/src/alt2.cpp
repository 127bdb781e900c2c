#include "wsp/alt2.hpp"

#include <array>
#include <utility>

namespace wsp {

namespace {

constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

void requireSL(const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3)
    throw Error(ErrorKind::NotSL, "matrix is not 3x3");
  const Int det = determinant(m);
  if (det != 1) throw Error(ErrorKind::NotSL, "determinant is " + det.get_str());
}

// Truncated quotient, so |a - q b| < |b|.
Int truncDiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

class Reducer {
 public:
  explicit Reducer(IntMatrix m) : m_(std::move(m)) {}

  void addRow(int dst, int src, const Int& a) {
    if (a == 0) return;
    m_.addRowMultiple(static_cast<std::size_t>(dst), static_cast<std::size_t>(src), a);
    ops_.push_back({dst, src, a});
  }
  const Int& at(int r, int c) const {
    return m_(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  const IntMatrix& matrix() const { return m_; }
  const std::vector<Elementary>& ops() const { return ops_; }

 private:
  IntMatrix m_;
  std::vector<Elementary> ops_;
};

}  // namespace

IntMatrix alt2(const IntMatrix& g) {
  if (g.rows() != 3 || g.cols() != 3)
    throw Error(ErrorKind::DimensionMismatch, "alt2 needs a 3x3 matrix");
  IntMatrix out(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const auto [i, j] = kPairs[r];
      const auto [k, l] = kPairs[c];
      out(r, c) = g(i, k) * g(j, l) - g(i, l) * g(j, k);
    }
  return out;
}

IntMatrix Elementary::matrix() const {
  IntMatrix m = IntMatrix::identity(3);
  m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) += a;
  return m;
}

IntMatrix product(const std::vector<Elementary>& factors) {
  IntMatrix m = IntMatrix::identity(3);
  for (const auto& e : factors) m = m * e.matrix();
  return m;
}

std::vector<Elementary> elementaryFactorization(const IntMatrix& input) {
  requireSL(input);
  Reducer red(input);
  for (int c = 0; c < 3; ++c) {
    // Euclid on rows c..2 until only row c is nonzero in column c.
    while (true) {
      int p = -1;
      for (int r = c; r < 3; ++r)
        if (red.at(r, c) != 0 && (p < 0 || abs(red.at(r, c)) < abs(red.at(p, c)))) p = r;
      bool others = false;
      for (int r = c; r < 3; ++r)
        if (r != p && red.at(r, c) != 0) {
          red.addRow(r, p, -truncDiv(red.at(r, c), red.at(p, c)));
          others = others || red.at(r, c) != 0;
        }
      if (others) continue;
      if (p != c) {
        red.addRow(c, p, Int(1));
        red.addRow(p, c, Int(-1));
      }
      break;
    }
    for (int r = 0; r < c; ++r) red.addRow(r, c, -red.at(r, c) * red.at(c, c));
  }
  // The diagonal is now +-1 with an even number of -1 entries.
  std::vector<int> negative;
  for (int i = 0; i < 3; ++i)
    if (red.at(i, i) == -1) negative.push_back(i);
  for (std::size_t k = 0; k + 1 < negative.size(); k += 2) {
    const int i = negative[k], j = negative[k + 1];
    red.addRow(j, i, Int(-1));
    red.addRow(i, j, Int(2));
    red.addRow(j, i, Int(-1));
  }
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r)
      if (r != c) red.addRow(r, c, -red.at(r, c) * red.at(c, c));
  if (red.matrix() != IntMatrix::identity(3))
    throw Error(ErrorKind::Internal, "elimination did not reach the identity");

  std::vector<Elementary> factors;
  for (const auto& op : red.ops()) factors.push_back({op.row, op.col, -op.a});
  if (product(factors) != input)
    throw Error(ErrorKind::Internal, "elementary factorization does not multiply back");
  return factors;
}

Elementary alt2Preimage(const Elementary& e) {
  // alt2(E_01(a)) = E_12(a), alt2(E_02(a)) = E_02(-a), alt2(E_12(a)) = E_01(a),
  // and the transposed statements.
  static const std::array<std::array<std::pair<int, int>, 3>, 3> source{{
      {{{-1, -1}, {1, 2}, {0, 2}}},
      {{{2, 1}, {-1, -1}, {0, 1}}},
      {{{2, 0}, {1, 0}, {-1, -1}}},
  }};
  static const std::array<std::array<int, 3>, 3> sign{{{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}}};
  if (e.row == e.col || e.row < 0 || e.row > 2 || e.col < 0 || e.col > 2)
    throw Error(ErrorKind::InvalidInput, "not an elementary position");
  const auto [r, c] = source[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)];
  return {r, c, sign[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] * e.a};
}

IntMatrix alt2Section(const IntMatrix& m) {
  IntMatrix y = IntMatrix::identity(3);
  for (const auto& e : elementaryFactorization(m)) y = y * alt2Preimage(e).matrix();
  if (alt2(y) != m) throw Error(ErrorKind::Internal, "section does not round trip");
  return y;
}

}  // namespace wsp

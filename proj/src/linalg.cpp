#include "wsp/linalg.hpp"

#include <algorithm>

namespace wsp {

namespace {

Int floorDiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swapRows(p, r);
    Rat inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) m.addRowMultiple(i, r, Rat(-m(i, c)));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMatrix toRat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVector toRat(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

std::optional<IntMatrix> toInt(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

std::optional<IntVector> toInt(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) return std::nullopt;
    r.push_back(x.get_num());
  }
  return r;
}

Int determinant(const IntMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix m = input;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swapRows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rat determinant(const RatMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix m = input;
  Rat det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swapRows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i)
      if (m(i, c) != 0) m.addRowMultiple(i, c, Rat(-m(i, c) / m(c, c)));
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return rref(copy).size();
}

std::size_t rank(const IntMatrix& m) { return rank(toRat(m)); }

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto c : pivots) isPivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    RatVector v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return RatMatrix::fromColumns(m.cols(), basis);
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return aug.columns(n, 2 * n);
}

IntMatrix inverseUnimodular(const IntMatrix& m) {
  auto inv = inverse(toRat(m));
  if (!inv) throw Error(ErrorKind::SingularInput, "matrix is not invertible");
  auto asInt = toInt(*inv);
  if (!asInt) throw Error(ErrorKind::SingularInput, "matrix is not unimodular");
  return *asInt;
}

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == m) break;
      if (best != r && (h(r, c) == 0 || abs(h(r, c)) > abs(h(best, c)))) {
        h.swapRows(best, r);
        u.swapRows(best, r);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q = -floorDiv(h(i, c), h(r, c));
        h.addRowMultiple(i, r, q);
        u.addRowMultiple(i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negateRow(r);
      u.negateRow(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = -floorDiv(h(i, c), h(r, c));
      h.addRowMultiple(i, r, q);
      u.addRowMultiple(i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();

  auto rowAdd = [&](std::size_t dst, std::size_t src, const Int& q) {
    d.addRowMultiple(dst, src, q);
    u.addRowMultiple(dst, src, q);
  };
  auto colAdd = [&](std::size_t dst, std::size_t src, const Int& q) {
    d.addColumnMultiple(dst, src, q);
    v.addColumnMultiple(dst, src, q);
  };
  auto rowSwap = [&](std::size_t x, std::size_t y) {
    d.swapRows(x, y);
    u.swapRows(x, y);
  };
  auto colSwap = [&](std::size_t x, std::size_t y) {
    d.swapColumns(x, y);
    v.swapColumns(x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    rowSwap(t, pi);
    colSwap(t, pj);

    while (true) {
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0) {
            rowAdd(i, t, -floorDiv(d(i, t), d(t, t)));
            if (d(i, t) != 0) clean = false;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0) {
            colAdd(j, t, -floorDiv(d(t, j), d(t, t)));
            if (d(t, j) != 0) clean = false;
          }
        if (!clean) {
          // Move the smallest remainder in row/column t onto the diagonal.
          std::size_t bi = t, bj = t;
          for (std::size_t i = t + 1; i < m; ++i)
            if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
              bi = i;
              bj = t;
            }
          for (std::size_t j = t + 1; j < n; ++j)
            if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
              bi = t;
              bj = j;
            }
          rowSwap(t, bi);
          colSwap(t, bj);
        }
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      rowAdd(t, bad, Int(1));
    }
    if (d(t, t) < 0) {
      d.negateRow(t);
      u.negateRow(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

SnfResult snfConstrainedSL(const IntMatrix& a, Side side) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch, "constrained SNF needs a nonempty square matrix");
  if (determinant(a) == 0) throw Error(ErrorKind::SingularInput, "matrix is singular");
  SnfResult res = snf(a);
  if (side == Side::Right && determinant(res.V) < 0) {
    res.V.negateColumn(0);
    res.U.negateRow(0);
  } else if (side == Side::Left && determinant(res.U) < 0) {
    res.U.negateRow(0);
    res.V.negateColumn(0);
  }
  return res;
}

IntVector elementaryDivisors(const IntMatrix& a) {
  const SnfResult res = snf(a);
  IntVector out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (res.D(i, i) != 0) out.push_back(res.D(i, i));
  return out;
}

IntMatrix integerKernel(const IntMatrix& m) {
  // Rows of U killing the transpose form a basis of the integer kernel.
  const HnfResult h = hnf(m.transpose());
  const std::size_t r = rank(m);
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - r) = h.U(j, i);
  return k;
}

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (wsp::rank(basis_) != basis_.cols())
    throw Error(ErrorKind::InvalidInput, "lattice basis is not linearly independent");
}

Lattice Lattice::zero(std::size_t ambientDim) { return Lattice(RatMatrix(ambientDim, 0)); }

Lattice Lattice::standard(std::size_t ambientDim) {
  return Lattice(RatMatrix::identity(ambientDim));
}

std::optional<IntVector> latticeMembership(const Lattice& lattice, const RatVector& v) {
  if (v.size() != lattice.ambientDim())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  auto x = solve(lattice.basis(), v);
  if (!x) return std::nullopt;
  return toInt(*x);
}

Lattice latticeIntersectSubspace(const Lattice& lattice, const RatMatrix& subspace) {
  if (subspace.rows() != lattice.ambientDim())
    throw Error(ErrorKind::DimensionMismatch, "subspace lives in a different ambient space");
  // Rows of `annihilator` cut out the subspace; lattice points x = B z lie in
  // it iff (annihilator * B) z = 0, an integer system after clearing rows.
  const RatMatrix annihilator = nullspace(subspace.transpose()).transpose();
  const RatMatrix constraint = annihilator * lattice.basis();
  IntMatrix system(constraint.rows(), constraint.cols());
  for (std::size_t i = 0; i < constraint.rows(); ++i) {
    Int den = 1;
    for (std::size_t j = 0; j < constraint.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), constraint(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < constraint.cols(); ++j) {
      Rat scaled = constraint(i, j) * den;
      system(i, j) = scaled.get_num();
    }
  }
  const IntMatrix kernel = integerKernel(system);
  return Lattice(lattice.basis() * toRat(kernel));
}

Lattice splitComplement(const Lattice& lattice, const Lattice& sub) {
  if (sub.ambientDim() != lattice.ambientDim())
    throw Error(ErrorKind::DimensionMismatch, "sublattice lives in a different ambient space");
  IntMatrix coords(lattice.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    auto c = latticeMembership(lattice, sub.vector(j));
    if (!c) throw Error(ErrorKind::InvalidInput, "sublattice is not contained in the lattice");
    for (std::size_t i = 0; i < lattice.rank(); ++i) coords(i, j) = (*c)[i];
  }
  const SnfResult s = snf(coords);
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (s.D(i, i) != 1)
      throw Error(ErrorKind::NotSaturated, "quotient has torsion of order " + s.D(i, i).get_str());
  const IntMatrix w = inverseUnimodular(s.U);
  return Lattice(lattice.basis() * toRat(w.columns(sub.rank(), lattice.rank())));
}

Lattice directSum(const Lattice& a, const Lattice& b) {
  if (a.ambientDim() != b.ambientDim())
    throw Error(ErrorKind::DimensionMismatch, "lattices live in different ambient spaces");
  std::vector<RatVector> cols;
  for (std::size_t j = 0; j < a.rank(); ++j) cols.push_back(a.vector(j));
  for (std::size_t j = 0; j < b.rank(); ++j) cols.push_back(b.vector(j));
  return Lattice(RatMatrix::fromColumns(a.ambientDim(), cols));
}

bool sameLattice(const Lattice& a, const Lattice& b) {
  if (a.ambientDim() != b.ambientDim() || a.rank() != b.rank()) return false;
  for (std::size_t j = 0; j < a.rank(); ++j)
    if (!latticeMembership(b, a.vector(j))) return false;
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (!latticeMembership(a, b.vector(j))) return false;
  return true;
}

}  // namespace wsp

#pragma once

// Dense exact linear algebra over Z and Q: Hermite and Smith normal forms
// with transformation witnesses, and the lattice operations built on them.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "wsp/error.hpp"

namespace wsp {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix fromColumns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows)
        throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  bool isZero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Column range [first, last).
  Matrix columns(std::size_t first, std::size_t last) const {
    Matrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
    return m;
  }
  Matrix rowsRange(std::size_t first, std::size_t last) const {
    Matrix m(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - first, j) = (*this)(i, j);
    return m;
  }

  // Row and column operations used by the normal-form algorithms.
  void addRowMultiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void addColumnMultiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swapColumns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void negateRow(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negateColumn(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size())
      throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix toRat(const IntMatrix& m);
RatVector toRat(const IntVector& v);
/// Integer matrix if every entry is integral.
std::optional<IntMatrix> toInt(const RatMatrix& m);
std::optional<IntVector> toInt(const RatVector& v);

Int determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Column basis of the right null space {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);
/// Some solution of a x = b, or nothing if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Inverse of a matrix with determinant +-1; throws SingularInput otherwise.
IntMatrix inverseUnimodular(const IntMatrix& m);

struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};

/// Row-style Hermite normal form: U * A = H with U unimodular, H in row
/// echelon form with positive pivots and entries above each pivot in
/// [0, pivot).
HnfResult hnf(const IntMatrix& a);

struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
};

/// Smith normal form: U * A * V = D, U and V unimodular, D diagonal with
/// nonnegative entries d1 | d2 | ... .
SnfResult snf(const IntMatrix& a);

enum class Side { Left, Right };

/// Smith normal form of a nonsingular square matrix where the factor on
/// `side` is forced into SL. A determinant -1 is moved to the other factor by
/// negating the first column of V (or first row of U) together with the
/// matching row of U (column of V).
SnfResult snfConstrainedSL(const IntMatrix& a, Side side);

/// Nonzero diagonal entries of the Smith normal form.
IntVector elementaryDivisors(const IntMatrix& a);

/// Column basis of the integer kernel {z in Z^n : m z = 0}.
IntMatrix integerKernel(const IntMatrix& m);

/// Free Z-submodule of Q^n given by linearly independent basis columns.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(RatMatrix basis);
  static Lattice zero(std::size_t ambientDim);
  static Lattice standard(std::size_t ambientDim);

  std::size_t ambientDim() const noexcept { return basis_.rows(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const RatMatrix& basis() const noexcept { return basis_; }
  RatVector vector(std::size_t j) const { return basis_.column(j); }

 private:
  RatMatrix basis_;
};

/// Integer coordinates of v in the lattice basis, if v lies in the lattice.
std::optional<IntVector> latticeMembership(const Lattice& lattice, const RatVector& v);

/// Lattice of elements of `lattice` lying in the column span of `subspace`.
/// The result is saturated in `lattice`.
Lattice latticeIntersectSubspace(const Lattice& lattice, const RatMatrix& subspace);

/// C with lattice = sub (+) C. Requires sub to be contained in lattice;
/// throws NotSaturated when lattice/sub has torsion.
Lattice splitComplement(const Lattice& lattice, const Lattice& sub);

/// Lattice spanned by the union of the two bases (must stay independent).
Lattice directSum(const Lattice& a, const Lattice& b);

/// True if both lattices generate the same subgroup.
bool sameLattice(const Lattice& a, const Lattice& b);

}  // namespace wsp

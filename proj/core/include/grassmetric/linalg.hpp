#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "grassmetric/errors.hpp"

namespace grassmetric {

using Scalar = double;
using Vector = std::vector<Scalar>;

/// Dense row-major real matrix. Entries are checked finite at construction.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t k);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  void set_row(std::size_t i, const Vector& v);

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;

  /// Max absolute entry.
  Scalar max_abs() const;

  /// Throws NonFinite if any entry is NaN or infinite.
  void check_finite() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Scalar dot(const Vector& a, const Vector& b);
Scalar norm(const Vector& v);
Vector scaled(const Vector& v, Scalar s);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);

/// det(M) via LU with partial pivoting, sign tracked through row swaps.
Scalar determinant(const Matrix& m);

/// Exact signed permutation sum, k <= 6. Independent oracle for determinant().
Scalar determinant_oracle(const Matrix& m);

/// Pivot count in row echelon form, relative threshold against the largest pivot.
std::size_t numerical_rank(const Matrix& m, Scalar tol_ratio = 1e-10);

/// Modified Gram-Schmidt on the rows, with a re-orthogonalization pass when
/// any projection coefficient exceeds half the working vector's norm.
/// Throws RankDeficient when the rows are numerically dependent.
Matrix orthonormalize(const Matrix& rows, Scalar tol_ratio = 1e-10);

/// Dense submatrix on 0-based, strictly increasing index lists.
Matrix submatrix(const Matrix& m, std::span<const std::size_t> row_idx,
                 std::span<const std::size_t> col_idx);

/// Rows spanning { v : M v = 0 }, orthonormal under the standard dot product.
/// Throws RankDeficient when the nullspace is trivial.
Matrix nullspace(const Matrix& m, Scalar tol_ratio = 1e-10);

/// Upper-triangular R with G = R^T R. Throws Error if G is not symmetric
/// positive definite.
Matrix cholesky_upper(const Matrix& g);

}  // namespace grassmetric

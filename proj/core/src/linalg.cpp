#include "grassmetric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace grassmetric {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) throw ShapeMismatch("matrix dimensions must be positive");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged initializer rows");
    std::size_t j = 0;
    for (Scalar v : r) (*this)(i, j++) = v;
    ++i;
  }
  check_finite();
}

Matrix Matrix::identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) throw ShapeMismatch("no rows");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  m.check_finite();
  return m;
}

Vector Matrix::row(std::size_t i) const {
  if (i >= rows_) throw IndexOutOfRange("row index");
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (i >= rows_) throw IndexOutOfRange("row index");
  if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shapes");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Scalar Matrix::max_abs() const {
  Scalar m = 0.0;
  for (Scalar v : data_) m = std::max(m, std::abs(v));
  return m;
}

void Matrix::check_finite() const {
  for (Scalar v : data_)
    if (!std::isfinite(v)) throw NonFinite("non-finite matrix entry");
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot of unequal lengths");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

Scalar norm(const Vector& v) { return std::sqrt(dot(v, v)); }

Vector scaled(const Vector& v, Scalar s) {
  Vector out(v);
  for (Scalar& x : out) x *= s;
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add of unequal lengths");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub of unequal lengths");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of non-square matrix");
  const std::size_t k = m.rows();
  Matrix a = m;
  Scalar det = 1.0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < k; ++r) {
      const Scalar f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < k; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

Scalar determinant_oracle(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of non-square matrix");
  const std::size_t k = m.rows();
  if (k > 6) throw TooLarge("permutation-sum oracle limited to k <= 6");
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar sum = 0.0;
  do {
    // parity by inversion count
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar prod = (inversions % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < k; ++i) prod *= m(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::size_t numerical_rank(const Matrix& m, Scalar tol_ratio) {
  if (tol_ratio <= 0.0) throw Error("tol_ratio must be positive");
  Matrix a = m;
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<Scalar> pivots;
  std::size_t row = 0, col = 0;
  while (row < r && col < c) {
    // complete pivoting over the remaining block keeps pivot magnitudes ordered
    std::size_t pr = row, pc = col;
    Scalar best = 0.0;
    for (std::size_t i = row; i < r; ++i)
      for (std::size_t j = col; j < c; ++j)
        if (std::abs(a(i, j)) > best) { best = std::abs(a(i, j)); pr = i; pc = j; }
    if (best == 0.0) break;
    for (std::size_t j = 0; j < c; ++j) std::swap(a(pr, j), a(row, j));
    for (std::size_t i = 0; i < r; ++i) std::swap(a(i, pc), a(i, col));
    pivots.push_back(best);
    for (std::size_t i = row + 1; i < r; ++i) {
      const Scalar f = a(i, col) / a(row, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < c; ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
    ++col;
  }
  if (pivots.empty()) return 0;
  const Scalar threshold = tol_ratio * pivots.front();
  return static_cast<std::size_t>(
      std::count_if(pivots.begin(), pivots.end(),
                    [threshold](Scalar p) { return p > threshold; }));
}

Matrix orthonormalize(const Matrix& rows, Scalar tol_ratio) {
  const std::size_t n = rows.rows();
  if (numerical_rank(rows, tol_ratio) < n)
    throw RankDeficient("orthonormalize: rows are numerically dependent");
  Matrix q = rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = q.row(i);
    const Scalar initial = norm(v);
    bool redo = false;
    for (std::size_t j = 0; j < i; ++j) {
      const Vector qj = q.row(j);
      const Scalar c = dot(qj, v);
      if (std::abs(c) > 0.5 * initial) redo = true;
      v = sub(v, scaled(qj, c));
    }
    if (redo) {
      for (std::size_t j = 0; j < i; ++j) {
        const Vector qj = q.row(j);
        v = sub(v, scaled(qj, dot(qj, v)));
      }
    }
    const Scalar nv = norm(v);
    if (nv <= tol_ratio * std::max(initial, 1.0))
      throw RankDeficient("orthonormalize: vanished row");
    q.set_row(i, scaled(v, 1.0 / nv));
  }
  return q;
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> row_idx,
                 std::span<const std::size_t> col_idx) {
  if (row_idx.empty() || col_idx.empty()) throw ShapeMismatch("empty index list");
  for (std::size_t i = 1; i < row_idx.size(); ++i)
    if (row_idx[i] <= row_idx[i - 1]) throw IndexOutOfRange("row indices not increasing");
  for (std::size_t i = 1; i < col_idx.size(); ++i)
    if (col_idx[i] <= col_idx[i - 1]) throw IndexOutOfRange("col indices not increasing");
  if (row_idx.back() >= m.rows() || col_idx.back() >= m.cols())
    throw IndexOutOfRange("submatrix index out of range");
  Matrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out(i, j) = m(row_idx[i], col_idx[j]);
  return out;
}

Matrix nullspace(const Matrix& m, Scalar tol_ratio) {
  const std::size_t c = m.cols();
  const std::size_t rank = numerical_rank(m, tol_ratio);
  if (rank == c) throw RankDeficient("nullspace is trivial");
  std::vector<Vector> q;  // orthonormal basis of the row space
  if (rank > 0) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Vector v = m.row(i);
      for (const Vector& u : q) v = sub(v, scaled(u, dot(u, v)));
      for (const Vector& u : q) v = sub(v, scaled(u, dot(u, v)));
      const Scalar nv = norm(v);
      if (nv > 1e-8 * std::max(1.0, norm(m.row(i)))) q.push_back(scaled(v, 1.0 / nv));
      if (q.size() == rank) break;
    }
  }
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < c && basis.size() < c - rank; ++k) {
    Vector v(c, 0.0);
    v[k] = 1.0;
    for (const Vector& u : q) v = sub(v, scaled(u, dot(u, v)));
    for (const Vector& u : basis) v = sub(v, scaled(u, dot(u, v)));
    for (const Vector& u : q) v = sub(v, scaled(u, dot(u, v)));
    for (const Vector& u : basis) v = sub(v, scaled(u, dot(u, v)));
    const Scalar nv = norm(v);
    if (nv > 1e-8) basis.push_back(scaled(v, 1.0 / nv));
  }
  if (basis.empty()) throw RankDeficient("nullspace is trivial");
  return Matrix::from_rows(basis);
}

Matrix cholesky_upper(const Matrix& g) {
  if (g.rows() != g.cols()) throw NonSquare("cholesky of non-square matrix");
  const std::size_t k = g.rows();
  const Scalar scale = std::max(g.max_abs(), 1.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (std::abs(g(i, j) - g(j, i)) > 1e-12 * scale)
        throw Error("cholesky: matrix not symmetric");
  Matrix l(k, k);  // lower factor, returned transposed
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Scalar s = g(i, j);
      for (std::size_t p = 0; p < j; ++p) s -= l(i, p) * l(j, p);
      if (i == j) {
        if (s <= 0.0) throw Error("cholesky: matrix not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l.transposed();
}

}  // namespace grassmetric

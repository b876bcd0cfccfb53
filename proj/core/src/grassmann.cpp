#include "grassmetric/grassmann.hpp"

#include <algorithm>
#include <cmath>

namespace grassmetric {

AngleResult subspace_angle(const SubspacePair& p) {
  const NInnerForm& form = p.left.form();
  const VectorTuple a = p.left.basis_tuple();
  const VectorTuple b = p.right.basis_tuple();
  const Scalar na = n_norm(form, a);
  const Scalar nb = n_norm(form, b);
  if (na <= 0.0 || nb <= 0.0) throw DegenerateSubspace("vanishing n-norm");
  Scalar c = n_inner(form, a, b) / (na * nb);
  if (std::abs(c) > 1.0 + 1e-9)
    throw InequalityViolated("cosine magnitude exceeds 1 beyond tolerance");
  c = std::clamp(c, -1.0, 1.0);
  return {c, std::acos(c), std::acos(std::abs(c))};
}

Scalar grassmann_distance(const SubspacePair& p) {
  return subspace_angle(p).angle_unoriented;
}

Matrix distance_matrix(const std::vector<Subspace>& subspaces) {
  if (subspaces.empty()) throw MixedSpaces("no subspaces given");
  const std::size_t k = subspaces.size();
  Matrix d(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      // SubspacePair construction enforces shared (form, m, n)
      d(i, j) = d(j, i) = grassmann_distance(SubspacePair(subspaces[i], subspaces[j]));
    }
  return d;
}

namespace {

// Rows mapped to orthonormal coordinates of the ambient: x -> R x with
// G = R^T R, so the standard dot there equals x^T G y.
Matrix to_orthonormal_coordinates(const GramNForm& g, const Matrix& rows) {
  if (g.is_standard()) return rows;
  const Matrix r = cholesky_upper(g.ambient());
  return rows * r.transposed();
}

const GramNForm& require_gram(const NInnerForm& form) {
  if (!form.is_gram())
    throw Error("operation requires a Gram form");
  return form.as_gram();
}

}  // namespace

Subspace orthogonal_complement(const Subspace& s) {
  const GramNForm& g = require_gram(s.form());
  const std::size_t m = s.dim(), n = s.order();
  if (n == m) throw FullSpace("complement of the full space is trivial");
  const Matrix rows = to_orthonormal_coordinates(g, s.basis());
  const Matrix comp = orthonormalize(nullspace(rows));
  return Subspace(NInnerForm::gram_standard(m), comp);
}

Scalar dual_n_inner(const VectorTuple& a, const VectorTuple& b) {
  if (a.order() != b.order()) throw OrderMismatch("dual tuple orders differ");
  return n_inner(NInnerForm::gram_standard(a.dim()), a, b);
}

DualAngleReport dual_angle_check(const SubspacePair& p) {
  const GramNForm& g = require_gram(p.left.form());
  const std::size_t m = p.left.dim();
  if (p.left.order() == m) throw FullSpace("duality needs n < m");
  const NInnerForm standard = NInnerForm::gram_standard(m);
  const Subspace l(standard, to_orthonormal_coordinates(g, p.left.basis()));
  const Subspace r(standard, to_orthonormal_coordinates(g, p.right.basis()));
  const Scalar primal = grassmann_distance(SubspacePair(l, r));
  const Scalar dual = grassmann_distance(
      SubspacePair(orthogonal_complement(l), orthogonal_complement(r)));
  return {primal, dual, std::abs(primal - dual)};
}

namespace {

void require_orthogonal(const Matrix& a, Scalar tol) {
  if (a.rows() != a.cols()) throw NonSquare("orthogonality check");
  const Matrix prod = a * a.transposed();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) > tol)
        throw NotOrthogonal("matrix is not orthogonal within tolerance");
}

Scalar block_minor(const Matrix& a, const IndexTuple& rows_1b, const IndexTuple& cols_1b) {
  std::vector<std::size_t> ri, ci;
  for (int i : rows_1b.indices()) ri.push_back(static_cast<std::size_t>(i - 1));
  for (int j : cols_1b.indices()) ci.push_back(static_cast<std::size_t>(j - 1));
  return determinant(submatrix(a, ri, ci));
}

IndexTuple leading_tuple(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  return IndexTuple(std::move(v));
}

int laplace_sign(std::size_t n, const IndexTuple& i) {
  const long e = static_cast<long>(n * (n + 1) / 2) + i.sum();
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace

MinorIdentity complementary_minor(const Matrix& a, const IndexTuple& i) {
  require_orthogonal(a, 1e-9);
  const std::size_t m = a.rows(), n = i.order();
  if (n >= m) throw OrderExceedsDimension("minor order must be below m");
  if (i.indices().back() > static_cast<int>(m)) throw IndexOutOfRange("tuple exceeds m");
  const int det_sign = determinant(a) > 0.0 ? 1 : -1;
  MinorIdentity out;
  out.minor = block_minor(a, leading_tuple(n), i);
  out.cominor = block_minor(a, leading_tuple(n).complement(m), i.complement(m));
  out.sign = det_sign * laplace_sign(n, i);
  out.residual = std::abs(out.minor - out.sign * out.cominor);
  return out;
}

Scalar laplace_identity_check(const Matrix& a, std::size_t n) {
  if (a.rows() != a.cols()) throw NonSquare("laplace identity");
  const std::size_t m = a.rows();
  if (n < 1 || n >= m) throw OrderExceedsDimension("need 1 <= n < m");
  Scalar sum = 0.0;
  const IndexTuple lead = leading_tuple(n);
  for (const IndexTuple& i : IndexTuple::all(m, n)) {
    sum += laplace_sign(n, i) * block_minor(a, lead, i) *
           block_minor(a, lead.complement(m), i.complement(m));
  }
  return std::abs(sum - determinant(a));
}

Scalar pluecker_norm(const Matrix& rows) {
  const Matrix prod = rows * rows.transposed();
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.rows(); ++j)
      if (std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) > 1e-9)
        throw NotOrthonormal("rows are not orthonormal within tolerance");
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < rows.rows(); ++i) vecs.push_back(rows.row(i));
  Scalar s = 0.0;
  for (const auto& [idx, c] : pluecker_coordinates(VectorTuple(std::move(vecs))))
    s += c * c;
  return s;
}

}  // namespace grassmetric

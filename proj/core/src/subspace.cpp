#include "grassmetric/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace grassmetric {

namespace {

bool same_form(const NInnerForm& a, const NInnerForm& b) {
  if (a.dim() != b.dim()) return false;
  if (a.is_gram() != b.is_gram() || a.is_diagonal() != b.is_diagonal()) return false;
  if (a.is_gram()) {
    const Matrix &ga = a.as_gram().ambient(), &gb = b.as_gram().ambient();
    for (std::size_t i = 0; i < ga.rows(); ++i)
      for (std::size_t j = 0; j < ga.cols(); ++j)
        if (ga(i, j) != gb(i, j)) return false;
  } else if (a.is_diagonal()) {
    if (a.as_diagonal().order() != b.as_diagonal().order()) return false;
    if (a.as_diagonal().stored_coefficients() != b.as_diagonal().stored_coefficients())
      return false;
  }
  return true;
}

// product of all argument norms, floored at 1 to keep tiny inputs honest
Scalar norm_scale(const VectorTuple& a, const VectorTuple& b) {
  Scalar s = 1.0;
  for (const Vector& v : a.vectors()) s *= std::max(norm(v), 1e-30);
  for (const Vector& v : b.vectors()) s *= std::max(norm(v), 1e-30);
  return std::max(s, 1.0);
}

}  // namespace

Subspace::Subspace(NInnerForm form, Matrix basis, Scalar tol_ratio)
    : form_(std::move(form)), basis_(std::move(basis)) {
  if (basis_.cols() != form_.dim())
    throw DimensionMismatch("basis dimension does not match form");
  if (basis_.rows() > basis_.cols())
    throw OrderExceedsDimension("more basis vectors than ambient dimension");
  if (numerical_rank(basis_, tol_ratio) < basis_.rows())
    throw RankDeficient("subspace basis is numerically dependent");
}

VectorTuple Subspace::basis_tuple() const {
  std::vector<Vector> rows;
  rows.reserve(basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  return VectorTuple(std::move(rows));
}

SubspacePair::SubspacePair(Subspace l, Subspace r)
    : left(std::move(l)), right(std::move(r)) {
  if (left.dim() != right.dim() || left.order() != right.order())
    throw MixedSpaces("subspace pair shape mismatch");
  if (!same_form(left.form(), right.form()))
    throw MixedSpaces("subspace pair forms differ");
}

Vector Decomposition::projection() const { return sub(original, residual); }

bool is_orthogonal_to_subspace(const Vector& a, const Subspace& s, Scalar tol) {
  if (a.size() != s.dim()) throw DimensionMismatch("vector/subspace dimension");
  const std::size_t n = s.order();
  const VectorTuple b = s.basis_tuple();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> left;
    left.reserve(n);
    left.push_back(a);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) left.push_back(b[j]);
    const VectorTuple lt(std::move(left));
    const Scalar v = n_inner(s.form(), lt, b);
    if (std::abs(v) > tol * norm_scale(lt, b)) return false;
  }
  return true;
}

Decomposition decompose(const Vector& x, const Subspace& s) {
  if (x.size() != s.dim()) throw DimensionMismatch("vector/subspace dimension");
  const std::size_t n = s.order();
  const VectorTuple b = s.basis_tuple();
  const Scalar denom = n_inner(s.form(), b, b);
  if (denom <= 1e-300) throw DegenerateSubspace("vanishing <B|B> denominator");
  Decomposition d;
  d.original = x;
  d.lambdas.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    d.lambdas[i] = n_inner(s.form(), b.with_slot(i, x), b) / denom;
  Vector c = x;
  for (std::size_t i = 0; i < n; ++i) c = sub(c, scaled(b[i], d.lambdas[i]));
  d.residual = std::move(c);
  return d;
}

CauchySchwarzVerdict cauchy_schwarz(const NInnerForm& form, const VectorTuple& a,
                                    const VectorTuple& b, Scalar tol) {
  if (a.order() != b.order()) throw OrderMismatch("tuple orders differ");
  const std::size_t n = a.order();
  const Scalar ab = n_inner(form, a, b);
  const Scalar aa = n_inner(form, a, a);
  const Scalar bb = n_inner(form, b, b);
  CauchySchwarzVerdict v;
  v.lhs = ab * ab;
  v.rhs = aa * bb;
  v.gap = v.rhs - v.lhs;
  const Scalar scale = std::max({1.0, std::abs(v.rhs), v.lhs});
  if (v.lhs > v.rhs + 1e-9 * scale)
    throw InequalityViolated("Cauchy-Schwarz violated beyond tolerance");
  v.equality = std::abs(v.lhs - v.rhs) <= tol * std::max(1.0, std::abs(v.rhs));

  const std::size_t rank_a = numerical_rank(a.as_matrix());
  const std::size_t rank_b = numerical_rank(b.as_matrix());
  if (rank_a < n) {
    v.which = EqualityCase::a_dependent;
  } else if (rank_b < n) {
    v.which = EqualityCase::b_dependent;
  } else {
    std::vector<Vector> stacked = a.vectors();
    for (const Vector& w : b.vectors()) stacked.push_back(w);
    const std::size_t rank_ab = numerical_rank(Matrix::from_rows(stacked));
    v.which = rank_ab == n ? EqualityCase::same_subspace : EqualityCase::strict;
  }
  return v;
}

}  // namespace grassmetric

#include "grassmetric/ninner.hpp"

#include <cmath>

namespace grassmetric {

VectorTuple::VectorTuple(std::vector<Vector> vectors) : vecs_(std::move(vectors)) {
  if (vecs_.empty()) throw OrderMismatch("vector tuple needs n >= 1");
  dim_ = vecs_.front().size();
  if (dim_ == 0) throw DimensionMismatch("zero-dimensional vectors");
  for (const Vector& v : vecs_) {
    if (v.size() != dim_) throw DimensionMismatch("mixed vector dimensions in tuple");
    for (Scalar x : v)
      if (!std::isfinite(x)) throw NonFinite("non-finite tuple entry");
  }
}

Matrix VectorTuple::as_matrix() const { return Matrix::from_rows(vecs_); }

VectorTuple VectorTuple::with_slot(std::size_t i, Vector v) const {
  if (i >= vecs_.size()) throw IndexOutOfRange("tuple slot");
  std::vector<Vector> copy = vecs_;
  copy[i] = std::move(v);
  return VectorTuple(std::move(copy));
}

GramNForm::GramNForm(Matrix ambient) : ambient_(std::move(ambient)) {
  if (ambient_.rows() != ambient_.cols()) throw NonSquare("ambient matrix");
  // symmetry + positive definiteness; cholesky throws on violation
  (void)cholesky_upper(ambient_);
}

GramNForm GramNForm::standard(std::size_t m) { return GramNForm(Matrix::identity(m)); }

bool GramNForm::is_standard() const {
  for (std::size_t i = 0; i < ambient_.rows(); ++i)
    for (std::size_t j = 0; j < ambient_.cols(); ++j)
      if (ambient_(i, j) != (i == j ? 1.0 : 0.0)) return false;
  return true;
}

Scalar GramNForm::ip(const Vector& x, const Vector& y) const {
  const std::size_t m = dim();
  if (x.size() != m || y.size() != m) throw DimensionMismatch("ambient inner product");
  Scalar s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0.0) continue;
    Scalar row = 0.0;
    for (std::size_t j = 0; j < m; ++j) row += ambient_(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

DiagonalNForm::DiagonalNForm(std::size_t m, std::size_t n,
                             std::map<IndexTuple, Scalar> coefficients)
    : m_(m), n_(n), coeffs_(std::move(coefficients)) {
  if (n_ == 0 || m_ == 0) throw OrderMismatch("diagonal form needs m, n >= 1");
  if (n_ > m_) throw OrderExceedsDimension("diagonal form order exceeds dimension");
  for (const auto& [idx, c] : coeffs_) {
    if (idx.order() != n_ || idx.indices().back() > static_cast<int>(m_))
      throw IndexOutOfRange("coefficient tuple out of range");
    if (!(c > 0.0)) throw Error("diagonal coefficients must be positive");
  }
}

Scalar DiagonalNForm::coefficient(const IndexTuple& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? 1.0 : it->second;
}

bool DiagonalNForm::uniform() const {
  std::optional<Scalar> c;
  for (const IndexTuple& idx : IndexTuple::all(m_, n_)) {
    const Scalar v = coefficient(idx);
    if (!c) c = v;
    else if (*c != v) return false;
  }
  return true;
}

std::pair<DiagonalNForm, Scalar> DiagonalNForm::normalized_uniform() const {
  if (!uniform()) throw Error("normalization requires all coefficients equal");
  const Scalar c = coefficient(IndexTuple::all(m_, n_).front());
  const Scalar scale = std::pow(c, 1.0 / (2.0 * static_cast<Scalar>(n_)));
  return {DiagonalNForm(m_, n_, {}), scale};
}

NInnerForm NInnerForm::gram(Matrix ambient) { return NInnerForm(GramNForm(std::move(ambient))); }
NInnerForm NInnerForm::gram_standard(std::size_t m) { return NInnerForm(GramNForm::standard(m)); }
NInnerForm NInnerForm::diagonal(DiagonalNForm form) { return NInnerForm(Impl(std::move(form))); }
NInnerForm NInnerForm::biased(Matrix ambient, Scalar bias) {
  return NInnerForm(Biased{GramNForm(std::move(ambient)), bias});
}

std::size_t NInnerForm::dim() const {
  if (is_gram()) return as_gram().dim();
  if (is_diagonal()) return as_diagonal().dim();
  return std::get<Biased>(impl_).base.dim();
}

std::optional<std::size_t> NInnerForm::order() const {
  if (is_diagonal()) return as_diagonal().order();
  return std::nullopt;
}

namespace {

Scalar gram_eval(const GramNForm& g, const VectorTuple& a, const VectorTuple& b) {
  const std::size_t n = a.order();
  Matrix pairwise(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairwise(i, j) = g.ip(a[i], b[j]);
  return determinant(pairwise);
}

Scalar diagonal_eval(const DiagonalNForm& d, const VectorTuple& a, const VectorTuple& b) {
  if (a.order() > a.dim()) return 0.0;  // all minors vanish
  const auto pa = pluecker_coordinates(a);
  const auto pb = pluecker_coordinates(b);
  Scalar s = 0.0;
  for (const auto& [idx, va] : pa) {
    auto it = pb.find(idx);
    if (it == pb.end()) continue;
    s += d.coefficient(idx) * va * it->second;
  }
  return s;
}

}  // namespace

Scalar NInnerForm::evaluate(const VectorTuple& a, const VectorTuple& b) const {
  if (a.order() != b.order()) throw OrderMismatch("tuple orders differ");
  if (a.dim() != b.dim() || a.dim() != dim())
    throw DimensionMismatch("tuple dimension does not match form");
  if (auto o = order(); o && *o != a.order())
    throw OrderMismatch("tuple order does not match diagonal form");
  if (a.order() > a.dim()) return 0.0;  // degenerate tuple, all minors vanish
  if (is_gram()) return gram_eval(as_gram(), a, b);
  if (is_diagonal()) return diagonal_eval(as_diagonal(), a, b);
  const auto& biased = std::get<Biased>(impl_);
  return gram_eval(biased.base, a, b) + biased.bias;
}

Scalar n_inner(const NInnerForm& form, const VectorTuple& a, const VectorTuple& b) {
  return form.evaluate(a, b);
}

Scalar n_norm(const NInnerForm& form, const VectorTuple& a) {
  Scalar sq = n_inner(form, a, a);
  if (sq < 0.0) {
    if (sq < -1e-12) throw NegativeSquare("negative squared n-norm");
    sq = 0.0;
  }
  return std::sqrt(sq);
}

Scalar misiak_reduce(const NInnerForm& form, const Vector& a, const Vector& b,
                     const std::vector<Vector>& shared) {
  std::vector<Vector> left, right;
  left.reserve(shared.size() + 1);
  right.reserve(shared.size() + 1);
  left.push_back(a);
  right.push_back(b);
  for (const Vector& x : shared) {
    left.push_back(x);
    right.push_back(x);
  }
  return n_inner(form, VectorTuple(std::move(left)), VectorTuple(std::move(right)));
}

std::map<IndexTuple, Scalar> pluecker_coordinates(const VectorTuple& a) {
  const std::size_t n = a.order(), m = a.dim();
  if (n > m) throw OrderExceedsDimension("more vectors than ambient dimension");
  const Matrix rows = a.as_matrix();
  std::vector<std::size_t> all_rows(n);
  for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
  std::map<IndexTuple, Scalar> out;
  for (const IndexTuple& idx : IndexTuple::all(m, n)) {
    std::vector<std::size_t> cols;
    cols.reserve(n);
    for (int c : idx.indices()) cols.push_back(static_cast<std::size_t>(c - 1));
    out.emplace(idx, determinant(submatrix(rows, all_rows, cols)));
  }
  return out;
}

}  // namespace grassmetric

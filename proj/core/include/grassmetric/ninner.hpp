#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "grassmetric/index_tuple.hpp"
#include "grassmetric/linalg.hpp"

namespace grassmetric {

/// Ordered list of n vectors of common dimension m (one slot block of the
/// 2n-argument product). Degenerate tuples with n > m are allowed; every
/// evaluation on them is 0.
class VectorTuple {
 public:
  explicit VectorTuple(std::vector<Vector> vectors);

  std::size_t order() const { return vecs_.size(); }
  std::size_t dim() const { return dim_; }
  const Vector& operator[](std::size_t i) const { return vecs_.at(i); }
  const std::vector<Vector>& vectors() const { return vecs_; }

  /// n x m row matrix, i-th row = i-th argument vector.
  Matrix as_matrix() const;

  VectorTuple with_slot(std::size_t i, Vector v) const;

 private:
  std::vector<Vector> vecs_;
  std::size_t dim_;
};

/// Determinant-of-pairwise-inner-products realization over an ambient
/// inner product <x|y> = x^T G y with G symmetric positive definite.
class GramNForm {
 public:
  explicit GramNForm(Matrix ambient);
  static GramNForm standard(std::size_t m);

  std::size_t dim() const { return ambient_.rows(); }
  const Matrix& ambient() const { return ambient_; }
  bool is_standard() const;

  Scalar ip(const Vector& x, const Vector& y) const;

 private:
  Matrix ambient_;
};

/// Diagonal realization: basis products C_I * delta^I_J with all C_I > 0,
/// extended multilinearly (evaluated through Pluecker coordinates).
class DiagonalNForm {
 public:
  DiagonalNForm(std::size_t m, std::size_t n,
                std::map<IndexTuple, Scalar> coefficients);

  std::size_t dim() const { return m_; }
  std::size_t order() const { return n_; }
  Scalar coefficient(const IndexTuple& idx) const;  // default 1
  const std::map<IndexTuple, Scalar>& stored_coefficients() const { return coeffs_; }

  bool uniform() const;

  /// For a constant-C form, the all-ones form plus the basis scale factor
  /// C^(1/2n) that realizes it. Throws Error when coefficients differ.
  std::pair<DiagonalNForm, Scalar> normalized_uniform() const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::map<IndexTuple, Scalar> coeffs_;
};

/// Dispatching evaluator of <a1,...,an | b1,...,bn>.
class NInnerForm {
 public:
  static NInnerForm gram(Matrix ambient);
  static NInnerForm gram_standard(std::size_t m);
  static NInnerForm diagonal(DiagonalNForm form);
  /// Test hook: Gram value plus a constant bias, which violates additivity
  /// and homogeneity. Used to exercise failure reporting paths.
  static NInnerForm biased(Matrix ambient, Scalar bias);

  std::size_t dim() const;
  /// Fixed order for the diagonal variant, nullopt for Gram.
  std::optional<std::size_t> order() const;

  bool is_gram() const { return std::holds_alternative<GramNForm>(impl_); }
  bool is_diagonal() const { return std::holds_alternative<DiagonalNForm>(impl_); }
  const GramNForm& as_gram() const { return std::get<GramNForm>(impl_); }
  const DiagonalNForm& as_diagonal() const { return std::get<DiagonalNForm>(impl_); }

  Scalar evaluate(const VectorTuple& a, const VectorTuple& b) const;

 private:
  struct Biased {
    GramNForm base;
    Scalar bias;
  };
  using Impl = std::variant<GramNForm, DiagonalNForm, Biased>;
  explicit NInnerForm(Impl impl) : impl_(std::move(impl)) {}
  Impl impl_;
};

Scalar n_inner(const NInnerForm& form, const VectorTuple& a, const VectorTuple& b);

/// sqrt(<A|A>); radicand within -1e-12 of zero is clamped, below that throws
/// NegativeSquare (signals a non-conforming form).
Scalar n_norm(const NInnerForm& form, const VectorTuple& a);

/// Misiak's (n+1)-argument product (a,b|x1,...,x_{n-1}) =
/// <a,x1,...,x_{n-1} | b,x1,...,x_{n-1}>. An empty shared list gives the
/// ordinary inner product.
Scalar misiak_reduce(const NInnerForm& form, const Vector& a, const Vector& b,
                     const std::vector<Vector>& shared);

/// All n x n column minors of the tuple's row matrix, keyed by increasing
/// 1-based column tuples.
std::map<IndexTuple, Scalar> pluecker_coordinates(const VectorTuple& a);

}  // namespace grassmetric

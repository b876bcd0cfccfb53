#pragma once

#include "grassmetric/ninner.hpp"

namespace grassmetric {

/// n-dimensional subspace of R^m given by a rank-verified basis row matrix,
/// living under a fixed n-inner form.
class Subspace {
 public:
  Subspace(NInnerForm form, Matrix basis, Scalar tol_ratio = 1e-10);

  std::size_t order() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const NInnerForm& form() const { return form_; }

  VectorTuple basis_tuple() const;

 private:
  NInnerForm form_;
  Matrix basis_;
};

/// Validated pair of subspaces sharing form, dimension and order.
struct SubspacePair {
  SubspacePair(Subspace l, Subspace r);
  Subspace left;
  Subspace right;
};

struct Decomposition {
  std::vector<Scalar> lambdas;
  Vector residual;   // the orthogonal part c
  Vector original;   // x
  Vector projection() const;  // x - c
};

enum class EqualityCase { a_dependent, b_dependent, same_subspace, strict };

struct CauchySchwarzVerdict {
  Scalar lhs;  // <A|B>^2
  Scalar rhs;  // <A|A><B|B>
  bool equality;
  EqualityCase which;
  Scalar gap;  // rhs - lhs, raw
};

/// True iff all n replacement products <a, b1,..,b_{i-1},b_{i+1},..,bn | B>
/// vanish within tol * scale, scale built from the argument norms.
bool is_orthogonal_to_subspace(const Vector& a, const Subspace& s, Scalar tol = 1e-8);

/// Unique lambda solution of the orthogonality system plus the residual
/// c = x - sum(lambda_i b_i). Throws DegenerateSubspace when <B|B> underflows.
Decomposition decompose(const Vector& x, const Subspace& s);

CauchySchwarzVerdict cauchy_schwarz(const NInnerForm& form, const VectorTuple& a,
                                    const VectorTuple& b, Scalar tol = 1e-7);

}  // namespace grassmetric

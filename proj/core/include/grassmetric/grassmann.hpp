#pragma once

#include "grassmetric/subspace.hpp"

namespace grassmetric {

struct AngleResult {
  Scalar cosine;            // raw normalized product, clamped to [-1, 1]
  Scalar angle_oriented;    // arccos(cosine), in [0, pi]
  Scalar angle_unoriented;  // arccos(|cosine|), in [0, pi/2]
};

/// Normalized product of the stored bases. Cosine values outside [-1,1] by
/// more than 1e-9 raise InequalityViolated; smaller excursions are clamped.
AngleResult subspace_angle(const SubspacePair& p);

/// arccos|cos|, the basis-invariant distance on the Grassmannian.
Scalar grassmann_distance(const SubspacePair& p);

/// Symmetric zero-diagonal matrix of pairwise distances. All subspaces must
/// share (form, m, n).
Matrix distance_matrix(const std::vector<Subspace>& subspaces);

/// (m-n)-dimensional subspace orthogonal to S, orthonormalized, under the
/// standard Gram form. A general SPD ambient is first mapped to orthonormal
/// coordinates through its Cholesky factor; diagonal forms are unsupported.
Subspace orthogonal_complement(const Subspace& s);

/// The dual (m-n)-inner product: the standard all-coefficients-one form at
/// order m-n.
Scalar dual_n_inner(const VectorTuple& a, const VectorTuple& b);

struct DualAngleReport {
  Scalar primal;
  Scalar dual;
  Scalar gap;
};

/// Unoriented angle of the pair against the unoriented angle of their
/// orthogonal complements.
DualAngleReport dual_angle_check(const SubspacePair& p);

struct MinorIdentity {
  Scalar minor;    // det of the first-n-rows submatrix on columns I
  Scalar cominor;  // det of the complementary submatrix
  int sign;        // sgn(det A) * (-1)^{n(n+1)/2} * (-1)^{sum I}
  Scalar residual; // |minor - sign * cominor|
};

/// Complementary-minor sign law for an orthogonal matrix A and a 1-based
/// increasing column tuple I (rows of the minor are the first n rows).
MinorIdentity complementary_minor(const Matrix& a, const IndexTuple& i);

/// |sum_I signed minor products - det A|; the Laplace expansion along the
/// first n rows.
Scalar laplace_identity_check(const Matrix& a, std::size_t n);

/// Sum of squared n x n minors of an orthonormal row matrix; identically 1.
Scalar pluecker_norm(const Matrix& rows);

}  // namespace grassmetric

#include <doctest.h>

#include <cmath>

#include "grassmetric/subspace.hpp"
#include "support/oracles.hpp"

using namespace grassmetric;

namespace {

Vector e(std::size_t i, std::size_t m) {
  Vector v(m, 0.0);
  v[i] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("subspace construction validates rank") {
  const NInnerForm f = NInnerForm::gram_standard(3);
  CHECK_NOTHROW(Subspace(f, Matrix{{1, 0, 0}, {0, 1, 0}}));
  CHECK_THROWS_AS(Subspace(f, Matrix{{1, 2, 3}, {2, 4, 6}}), RankDeficient);
  CHECK_THROWS_AS(Subspace(f, Matrix{{1, 0}, {0, 1}}), DimensionMismatch);
}

TEST_CASE("orthogonality to a subspace") {
  const NInnerForm f = NInnerForm::gram_standard(3);
  const Subspace s(f, Matrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(is_orthogonal_to_subspace(e(2, 3), s));
  CHECK_FALSE(is_orthogonal_to_subspace(e(0, 3), s));
  CHECK(is_orthogonal_to_subspace(Vector(3, 0.0), s));
  CHECK_THROWS_AS(is_orthogonal_to_subspace(Vector(4, 0.0), s), DimensionMismatch);
}

TEST_CASE("decompose hand values") {
  const NInnerForm f = NInnerForm::gram_standard(3);
  SUBCASE("orthonormal basis reads coordinates off") {
    const Subspace s(f, Matrix{{1, 0, 0}, {0, 1, 0}});
    const Decomposition d = decompose({1, 2, 3}, s);
    CHECK(d.lambdas[0] == doctest::Approx(1.0));
    CHECK(d.lambdas[1] == doctest::Approx(2.0));
    CHECK(d.residual[0] == doctest::Approx(0.0));
    CHECK(d.residual[1] == doctest::Approx(0.0));
    CHECK(d.residual[2] == doctest::Approx(3.0));
  }
  SUBCASE("oblique basis, least-squares oracle values") {
    const Subspace s(f, Matrix{{1, 0, 0}, {1, 1, 0}});
    const Decomposition d = decompose({2, 3, 4}, s);
    CHECK(d.lambdas[0] == doctest::Approx(-1.0));
    CHECK(d.lambdas[1] == doctest::Approx(3.0));
    CHECK(d.residual[2] == doctest::Approx(4.0));
  }
  SUBCASE("member of the subspace leaves no residual") {
    const Subspace s(f, Matrix{{1, 0, 0}, {1, 1, 0}});
    const Decomposition d = decompose({5, -2, 0}, s);
    CHECK(norm(d.residual) <= 1e-9);
  }
}

TEST_CASE("decompose residual is orthogonal, projection matches least squares") {
  gmtest::Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 4, n = 2;
    const Matrix basis = gmtest::random_independent_rows(rng, n, m);
    const Vector x = gmtest::random_vector(rng, m);
    const NInnerForm f = NInnerForm::gram_standard(m);
    const Subspace s(f, basis);
    const Decomposition d = decompose(x, s);
    CHECK(is_orthogonal_to_subspace(d.residual, s, 1e-8));
    // x = sum + c reconstruction
    Vector recon = d.residual;
    for (std::size_t i = 0; i < n; ++i) recon = add(recon, scaled(basis.row(i), d.lambdas[i]));
    CHECK(norm(sub(recon, x)) <= 1e-8 * std::max(1.0, norm(x)));
    const Vector ls = gmtest::least_squares_projection(basis, x);
    CHECK(norm(sub(d.projection(), ls)) <= 1e-8 * std::max(1.0, norm(x)));
  }
}

TEST_CASE("decompose projection is basis-stable") {
  gmtest::Rng rng(73);
  for (int t = 0; t < 50; ++t) {
    const Matrix basis = gmtest::random_independent_rows(rng, 2, 4);
    Matrix p = gmtest::random_matrix(rng, 2, 2);
    while (std::abs(determinant(p)) < 0.1) p = gmtest::random_matrix(rng, 2, 2);
    const Matrix rebased = p * basis;
    const Vector x = gmtest::random_vector(rng, 4);
    const NInnerForm f = NInnerForm::gram_standard(4);
    const Vector p1 = decompose(x, Subspace(f, basis)).projection();
    const Vector p2 = decompose(x, Subspace(f, rebased)).projection();
    CHECK(norm(sub(p1, p2)) <= 1e-8 * std::max(1.0, norm(x)));
  }
}

TEST_CASE("decompose under a general SPD ambient still satisfies the system") {
  gmtest::Rng rng(79);
  const NInnerForm f = NInnerForm::gram(gmtest::random_spd(rng, 4));
  for (int t = 0; t < 50; ++t) {
    const Matrix basis = gmtest::random_independent_rows(rng, 2, 4);
    const Vector x = gmtest::random_vector(rng, 4);
    const Subspace s(f, basis);
    CHECK(is_orthogonal_to_subspace(decompose(x, s).residual, s, 1e-8));
  }
}

TEST_CASE("cauchy-schwarz hand cases") {
  const NInnerForm f = NInnerForm::gram_standard(3);
  SUBCASE("identical tuples: equality, same subspace") {
    const VectorTuple a({e(0, 3), e(1, 3)});
    const auto v = cauchy_schwarz(f, a, a);
    CHECK(v.lhs == doctest::Approx(1.0));
    CHECK(v.rhs == doctest::Approx(1.0));
    CHECK(v.equality);
    CHECK(v.which == EqualityCase::same_subspace);
  }
  SUBCASE("dependent left tuple") {
    const VectorTuple a({e(0, 3), scaled(e(0, 3), 2.0)});
    const VectorTuple b({e(0, 3), e(1, 3)});
    const auto v = cauchy_schwarz(f, a, b);
    CHECK(v.lhs == doctest::Approx(0.0));
    CHECK(v.rhs == doctest::Approx(0.0));
    CHECK(v.equality);
    CHECK(v.which == EqualityCase::a_dependent);
  }
  SUBCASE("strict inequality") {
    const VectorTuple a({e(0, 3), e(1, 3)});
    const VectorTuple b({e(0, 3), e(2, 3)});
    const auto v = cauchy_schwarz(f, a, b);
    CHECK(v.lhs == doctest::Approx(0.0));
    CHECK(v.rhs == doctest::Approx(1.0));
    CHECK_FALSE(v.equality);
    CHECK(v.which == EqualityCase::strict);
  }
}

TEST_CASE("cauchy-schwarz holds on random pairs, both variants") {
  gmtest::Rng rng(83);
  const std::pair<std::size_t, std::size_t> configs[] = {{3, 2}, {4, 2}, {4, 3}, {5, 3}};
  for (const auto& [m, n] : configs) {
    const NInnerForm forms[] = {NInnerForm::gram_standard(m),
                                NInnerForm::diagonal(DiagonalNForm(m, n, {}))};
    for (const NInnerForm& f : forms) {
      for (int t = 0; t < 200; ++t) {
        const VectorTuple a = gmtest::random_tuple(rng, n, m);
        const VectorTuple b = gmtest::random_tuple(rng, n, m);
        CHECK_NOTHROW(cauchy_schwarz(f, a, b));
      }
    }
  }
}

TEST_CASE("same-subspace classification agrees with a rank oracle") {
  gmtest::Rng rng(89);
  const NInnerForm f = NInnerForm::gram_standard(4);
  for (int t = 0; t < 100; ++t) {
    const VectorTuple a = gmtest::random_independent_tuple(rng, 2, 4);
    Matrix p = gmtest::random_matrix(rng, 2, 2);
    while (std::abs(determinant(p)) < 0.1) p = gmtest::random_matrix(rng, 2, 2);
    const Matrix rebased = p * a.as_matrix();
    const VectorTuple b({rebased.row(0), rebased.row(1)});
    const auto v = cauchy_schwarz(f, a, b);
    CHECK(v.which == EqualityCase::same_subspace);
    CHECK(v.equality);
    // independent oracle: stacked rank equals n
    std::vector<Vector> stacked = a.vectors();
    for (const Vector& w : b.vectors()) stacked.push_back(w);
    CHECK(numerical_rank(Matrix::from_rows(stacked)) == 2);
  }
}

TEST_CASE("inequality violation is detected") {
  // bias -3: lhs (0-3)^2 = 9 against rhs (1-3)(1-3) = 4
  const NInnerForm bad = NInnerForm::biased(Matrix::identity(3), -3.0);
  const VectorTuple a({e(0, 3), e(1, 3)});
  const VectorTuple b({e(0, 3), e(2, 3)});
  CHECK_THROWS_AS(cauchy_schwarz(bad, a, b), InequalityViolated);
}

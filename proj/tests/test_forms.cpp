#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "grassmetric/forms.hpp"
#include "support/oracles.hpp"

using namespace grassmetric;

namespace {

Vector e(std::size_t i, std::size_t m) {
  Vector v(m, 0.0);
  v[i] = 1.0;
  return v;
}

NForm random_sparse_form(gmtest::Rng& rng, std::size_t m, std::size_t n,
                         double density = 0.3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0), coeff(-1.0, 1.0);
  NForm f(m, n);
  for (const IndexTuple& idx : IndexTuple::all(m, n))
    if (coin(rng) < density) f.add_term(idx.indices(), coeff(rng));
  return f;
}

}  // namespace

TEST_CASE("generalized delta hand values") {
  CHECK(generalized_delta({1, 2}, {1, 2}) == 1);
  CHECK(generalized_delta({1, 2}, {2, 1}) == -1);
  CHECK(generalized_delta({1, 2}, {1, 3}) == 0);
  CHECK(generalized_delta({1, 1}, {1, 1}) == 0);  // repeats
  CHECK(generalized_delta({3, 1, 2}, {1, 2, 3}) == 1);
}

TEST_CASE("generalized delta matches the incidence-determinant oracle") {
  // exhaustive over all (I, J) sequences with m <= 5, n <= 3
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 3 && n <= m; ++n) {
      std::vector<int> i(n, 1), j(n, 1);
      const auto advance = [m](std::vector<int>& seq) {
        for (std::size_t k = 0; k < seq.size(); ++k) {
          if (seq[k] < static_cast<int>(m)) {
            ++seq[k];
            for (std::size_t l = 0; l < k; ++l) seq[l] = 1;
            return true;
          }
        }
        return false;
      };
      do {
        std::fill(j.begin(), j.end(), 1);
        do {
          CHECK(generalized_delta(i, j) == gmtest::delta_incidence_oracle(i, j));
        } while (advance(j));
      } while (advance(i));
    }
  }
}

TEST_CASE("wedge of tuple") {
  const NForm w = wedge_of_tuple(VectorTuple({e(0, 3), e(1, 3)}));
  CHECK(w.coefficient(IndexTuple({1, 2})) == doctest::Approx(1.0));
  CHECK(w.entries().size() == 1);  // zero minors dropped

  const NForm swapped = wedge_of_tuple(VectorTuple({e(1, 3), e(0, 3)}));
  CHECK(swapped.coefficient(IndexTuple({1, 2})) == doctest::Approx(-1.0));

  const NForm mixed = wedge_of_tuple(VectorTuple({{1, 1, 0}, {0, 1, 1}}));
  CHECK(mixed.coefficient(IndexTuple({1, 2})) == doctest::Approx(1.0));
  CHECK(mixed.coefficient(IndexTuple({1, 3})) == doctest::Approx(1.0));
  CHECK(mixed.coefficient(IndexTuple({2, 3})) == doctest::Approx(1.0));
}

TEST_CASE("unsorted terms normalize by sorting with sign") {
  NForm f(3, 2);
  f.add_term({2, 1}, 1.0);
  CHECK(f.coefficient(IndexTuple({1, 2})) == doctest::Approx(-1.0));
  f.add_term({1, 1}, 5.0);  // repeated index contributes nothing
  CHECK(f.entries().size() == 1);
  f.add_term({1, 2}, 1.0);  // cancels back to zero, entry dropped
  CHECK(f.entries().empty());
}

TEST_CASE("form inner hand values") {
  const NInnerForm f = NInnerForm::gram_standard(3);
  NForm u(3, 2);
  u.add_term({1, 2}, 1.0);
  CHECK(form_inner(f, u, u) == doctest::Approx(1.0));

  // w = p e1^e2 - q e1^e3, <w|w> = p^2 + q^2 (cross basis product is 0)
  NForm w(3, 2);
  w.add_term({1, 2}, 1.0);
  w.add_term({1, 3}, -2.0);
  CHECK(form_inner(f, w, w) == doctest::Approx(5.0));
  CHECK(form_norm(f, w) == doctest::Approx(std::sqrt(5.0)));
  CHECK(form_norm(f, NForm(3, 2)) == 0.0);
}

TEST_CASE("form inner is symmetric and bilinear") {
  gmtest::Rng rng(55);
  const NInnerForm f = NInnerForm::gram_standard(5);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const NForm u = random_sparse_form(rng, 5, 2);
    const NForm v = random_sparse_form(rng, 5, 2);
    const NForm w = random_sparse_form(rng, 5, 2);
    CHECK(form_inner(f, u, v) == doctest::Approx(form_inner(f, v, u)).epsilon(1e-12));
    const double alpha = coeff(rng);
    NForm combo(5, 2);
    for (const auto& [idx, c] : v.entries()) combo.add_term(idx.indices(), alpha * c);
    for (const auto& [idx, c] : w.entries()) combo.add_term(idx.indices(), c);
    CHECK(form_inner(f, u, combo) ==
          doctest::Approx(alpha * form_inner(f, u, v) + form_inner(f, u, w))
              .epsilon(1e-9)
              .scale(1.0));
  }
}

TEST_CASE("positive semidefinite under the standard gram form") {
  gmtest::Rng rng(59);
  for (int t = 0; t < 100; ++t) {
    const NForm u = random_sparse_form(rng, 5, 2);
    const NInnerForm f = NInnerForm::gram_standard(5);
    const double sq = form_inner(f, u, u);
    CHECK(sq >= -1e-12);
    if (sq < 1e-12) {
      for (const auto& [idx, c] : u.entries()) CHECK(std::abs(c) < 1e-9);
    }
  }
}

TEST_CASE("decomposable consistency with the tuple product") {
  gmtest::Rng rng(61);
  const NInnerForm forms[] = {NInnerForm::gram_standard(4),
                              NInnerForm::diagonal(DiagonalNForm(4, 2, {}))};
  for (const NInnerForm& f : forms) {
    for (int t = 0; t < 50; ++t) {
      const VectorTuple a = gmtest::random_tuple(rng, 2, 4);
      const VectorTuple b = gmtest::random_tuple(rng, 2, 4);
      CHECK(form_inner(f, wedge_of_tuple(a), wedge_of_tuple(b)) ==
            doctest::Approx(n_inner(f, a, b)).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("json round trip") {
  gmtest::Rng rng(67);
  const NForm u = random_sparse_form(rng, 5, 3, 0.5);
  const NForm back = NForm::from_json(u.to_json());
  CHECK(back.dim() == u.dim());
  CHECK(back.order() == u.order());
  CHECK(back.entries().size() == u.entries().size());
  for (const auto& [idx, c] : u.entries()) CHECK(back.coefficient(idx) == c);
  CHECK_THROWS_AS(NForm::from_json(nlohmann::json{{"m", 3}}), ParseError);
}

TEST_CASE("shape errors") {
  const NInnerForm f = NInnerForm::gram_standard(3);
  CHECK_THROWS_AS(form_inner(f, NForm(3, 2), NForm(3, 1)), ShapeMismatch);
  CHECK_THROWS_AS(form_inner(f, NForm(4, 2), NForm(4, 2)), DimensionMismatch);
  CHECK_THROWS_AS(NForm(3, 4), OrderExceedsDimension);
  CHECK_THROWS_AS(wedge_of_tuple(VectorTuple({e(0, 2), e(1, 2), e(0, 2)})),
                  OrderExceedsDimension);
}

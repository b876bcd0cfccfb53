#pragma once

#include <map>

#include "grassmetric/ninner.hpp"

#include <nlohmann/json_fwd.hpp>

namespace grassmetric {

/// Permutation sign relating I to J when they are the same set of distinct
/// indices, 0 otherwise (repeats allowed, yielding 0).
int generalized_delta(const std::vector<int>& i, const std::vector<int>& j);

/// Sparse element of Lambda_n(V) over the standard basis: coefficients on
/// strictly increasing index tuples. Coefficients below 1e-14 in magnitude
/// are dropped on insertion.
class NForm {
 public:
  NForm(std::size_t m, std::size_t n);

  std::size_t dim() const { return m_; }
  std::size_t order() const { return n_; }

  /// Adds c * e_{i1} ^ ... ^ e_{in}; unsorted index lists are normalized by
  /// sorting with sign tracking, repeated indices contribute nothing.
  void add_term(const std::vector<int>& indices, Scalar c);

  Scalar coefficient(const IndexTuple& idx) const;  // absent = 0
  const std::map<IndexTuple, Scalar>& entries() const { return coeffs_; }

  nlohmann::json to_json() const;
  static NForm from_json(const nlohmann::json& j);

 private:
  std::size_t m_;
  std::size_t n_;
  std::map<IndexTuple, Scalar> coeffs_;
};

/// Decomposable form of a tuple; its coefficients are the tuple's Pluecker
/// coordinates.
NForm wedge_of_tuple(const VectorTuple& a);

/// Inner product induced on Lambda_n(V): double sum of coefficient products
/// times basis n-inner products. For the diagonal variant the basis product
/// collapses to a coefficient lookup.
Scalar form_inner(const NInnerForm& form, const NForm& u, const NForm& v);

Scalar form_norm(const NInnerForm& form, const NForm& u);

}  // namespace grassmetric

#include "grassmetric/forms.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace grassmetric {

int generalized_delta(const std::vector<int>& i, const std::vector<int>& j) {
  if (i.size() != j.size()) return 0;
  const std::size_t n = i.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (i[a] == i[b] || j[a] == j[b]) return 0;
  // sign of the permutation mapping i onto j, 0 when the sets differ
  std::vector<int> pos(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::find(j.begin(), j.end(), i[a]);
    if (it == j.end()) return 0;
    pos[a] = static_cast<int>(it - j.begin());
  }
  int inversions = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (pos[a] > pos[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

NForm::NForm(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0) throw ShapeMismatch("form needs m, n >= 1");
  if (n > m) throw OrderExceedsDimension("form order exceeds dimension");
}

void NForm::add_term(const std::vector<int>& indices, Scalar c) {
  if (indices.size() != n_) throw OrderMismatch("term order mismatch");
  for (int i : indices)
    if (i < 1 || i > static_cast<int>(m_)) throw IndexOutOfRange("term index");
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
  const int sign = generalized_delta(indices, sorted);
  const IndexTuple key(sorted);
  const Scalar next = coefficient(key) + sign * c;
  if (std::abs(next) < 1e-14) {
    coeffs_.erase(key);
  } else {
    coeffs_[key] = next;
  }
}

Scalar NForm::coefficient(const IndexTuple& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? 0.0 : it->second;
}

nlohmann::json NForm::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [idx, c] : coeffs_)
    entries.push_back({{"idx", idx.indices()}, {"c", c}});
  return {{"m", m_}, {"n", n_}, {"entries", entries}};
}

NForm NForm::from_json(const nlohmann::json& j) {
  try {
    NForm f(j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
      const auto idx = e.at("idx").get<std::vector<int>>();
      IndexTuple key(idx);  // enforce strictly increasing input
      f.add_term(idx, e.at("c").get<Scalar>());
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad n-form json: ") + e.what());
  }
}

NForm wedge_of_tuple(const VectorTuple& a) {
  NForm f(a.dim(), a.order());
  for (const auto& [idx, c] : pluecker_coordinates(a)) f.add_term(idx.indices(), c);
  return f;
}

namespace {

VectorTuple basis_tuple(std::size_t m, const IndexTuple& idx) {
  std::vector<Vector> vecs;
  vecs.reserve(idx.order());
  for (int i : idx.indices()) {
    Vector e(m, 0.0);
    e[static_cast<std::size_t>(i - 1)] = 1.0;
    vecs.push_back(std::move(e));
  }
  return VectorTuple(std::move(vecs));
}

}  // namespace

Scalar form_inner(const NInnerForm& form, const NForm& u, const NForm& v) {
  if (u.dim() != v.dim() || u.order() != v.order())
    throw ShapeMismatch("forms have different shape");
  if (u.dim() != form.dim()) throw DimensionMismatch("form dimension mismatch");
  if (auto o = form.order(); o && *o != u.order())
    throw OrderMismatch("n-inner form order mismatch");

  if (form.is_diagonal()) {
    const DiagonalNForm& d = form.as_diagonal();
    Scalar s = 0.0;
    for (const auto& [idx, cu] : u.entries()) {
      const Scalar cv = v.coefficient(idx);
      if (cv == 0.0) continue;
      s += d.coefficient(idx) * cu * cv;
    }
    return s;
  }

  Scalar s = 0.0;
  for (const auto& [iu, cu] : u.entries())
    for (const auto& [iv, cv] : v.entries()) {
      const Scalar basis =
          n_inner(form, basis_tuple(u.dim(), iu), basis_tuple(u.dim(), iv));
      s += cu * cv * basis;
    }
  return s;
}

Scalar form_norm(const NInnerForm& form, const NForm& u) {
  Scalar sq = form_inner(form, u, u);
  if (sq < 0.0) {
    if (sq < -1e-12) throw NegativeSquare("negative squared form norm");
    sq = 0.0;
  }
  return std::sqrt(sq);
}

}  // namespace grassmetric

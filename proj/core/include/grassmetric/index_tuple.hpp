#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "grassmetric/errors.hpp"

namespace grassmetric {

/// Strictly increasing 1-based basis index tuple i1 < i2 < ... < in.
class IndexTuple {
 public:
  explicit IndexTuple(std::vector<int> indices);

  const std::vector<int>& indices() const { return idx_; }
  std::size_t order() const { return idx_.size(); }
  int sum() const;

  /// All increasing n-tuples drawn from {1..m}, lexicographic order.
  static std::vector<IndexTuple> all(std::size_t m, std::size_t n);

  /// The increasing (m-n)-tuple {1..m} \ this.
  IndexTuple complement(std::size_t m) const;

  auto operator<=>(const IndexTuple&) const = default;

 private:
  std::vector<int> idx_;
};

}  // namespace grassmetric

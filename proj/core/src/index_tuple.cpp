#include "grassmetric/index_tuple.hpp"

#include <numeric>

namespace grassmetric {

IndexTuple::IndexTuple(std::vector<int> indices) : idx_(std::move(indices)) {
  if (idx_.empty()) throw IndexOutOfRange("empty index tuple");
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] < 1) throw IndexOutOfRange("index tuples are 1-based");
    if (i > 0 && idx_[i] <= idx_[i - 1])
      throw IndexOutOfRange("index tuple not strictly increasing");
  }
}

int IndexTuple::sum() const { return std::accumulate(idx_.begin(), idx_.end(), 0); }

std::vector<IndexTuple> IndexTuple::all(std::size_t m, std::size_t n) {
  std::vector<IndexTuple> out;
  if (n == 0 || n > m) return out;
  std::vector<int> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<int>(i + 1);
  while (true) {
    out.emplace_back(cur);
    // next combination
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < static_cast<int>(m - n + i + 1)) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

IndexTuple IndexTuple::complement(std::size_t m) const {
  if (idx_.back() > static_cast<int>(m)) throw IndexOutOfRange("tuple exceeds dimension");
  std::vector<int> out;
  std::size_t p = 0;
  for (int i = 1; i <= static_cast<int>(m); ++i) {
    if (p < idx_.size() && idx_[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  if (out.empty()) throw FullSpace("complement of the full tuple is empty");
  return IndexTuple(std::move(out));
}

}  // namespace grassmetric

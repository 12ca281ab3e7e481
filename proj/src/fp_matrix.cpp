#include "gk/fp_matrix.hpp"

#include <algorithm>

namespace gk {

std::vector<std::uint32_t> FpMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::size_t> FpMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
    std::size_t pivot = next;
    while (pivot < rows_ && at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != next)
      std::swap_ranges(row_ptr(pivot), row_ptr(pivot) + cols_, row_ptr(next));

    std::uint32_t* prow = row_ptr(next);
    const std::uint32_t inv = p_.inv(prow[c]);
    for (std::size_t k = c; k < cols_; ++k) prow[k] = p_.mul(prow[k], inv);

    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == next) continue;
      std::uint32_t* target = row_ptr(r);
      const std::uint32_t factor = target[c];
      if (factor == 0) continue;
      const std::uint32_t neg = p_.neg(factor);
      for (std::size_t k = c; k < cols_; ++k)
        if (prow[k]) target[k] = p_.add(target[k], p_.mul(neg, prow[k]));
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.row_reduce().size();
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix reduced = *this;
  const auto pivots = reduced.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  FpMatrix kernel(p_, cols_ - pivots.size(), cols_);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    kernel.set(k, free, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      kernel.set(k, pivots[r], p_.neg(reduced.at(r, free)));
    ++k;
  }
  kernel.row_reduce();
  return kernel;
}

}  // namespace gk

#pragma once

#include <cstdint>
#include <vector>

#include "gk/fp.hpp"

namespace gk {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(PrimeModulus p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  PrimeModulus modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = p_.reduce(v); }
  std::vector<std::uint32_t> row(std::size_t r) const;

  /// Gauss-Jordan elimination in place, pivoting on the first row with a
  /// nonzero entry. Leaves reduced row echelon form with unit pivots and
  /// returns the pivot column of each nonzero row.
  std::vector<std::size_t> row_reduce();

  std::size_t rank() const;

  /// Kernel {v : A v = 0} as the rows of a matrix in reduced row echelon form.
  /// rank() + nullspace().rows() == cols().
  FpMatrix nullspace() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

  PrimeModulus p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

}  // namespace gk

#pragma once

#include "cobweb/bigint.hpp"

#include <cstddef>
#include <vector>

namespace cobweb {

/// Dense square matrix of exact integers, row-major. Elements of a finite
/// incidence algebra are stored this way over a fixed linear extension.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size) : size_(size), entries_(size * size) {}

  static SquareMatrix identity(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  BigInt& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }

  bool is_unit_upper_triangular() const;

  /// Leading size x size block.
  SquareMatrix leading_block(std::size_t size) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<BigInt> entries_;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

/// Exact inverse of a unit upper-triangular matrix by back-substitution.
/// Throws Error if the input is not unit upper-triangular.
SquareMatrix invert_unit_upper_triangular(const SquareMatrix& m);

}  // namespace cobweb

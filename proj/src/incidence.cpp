#include "cobweb/incidence.hpp"

#include "cobweb/errors.hpp"

namespace cobweb {

SquareMatrix SquareMatrix::identity(std::size_t size) {
  SquareMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

bool SquareMatrix::is_unit_upper_triangular() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  }
  return true;
}

SquareMatrix SquareMatrix::leading_block(std::size_t size) const {
  if (size > size_)
    throw Error("leading block " + std::to_string(size) + " exceeds matrix size " +
                std::to_string(size_));
  SquareMatrix block(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) block(i, j) = (*this)(i, j);
  return block;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) throw Error("matrix size mismatch");
  const std::size_t n = a.size();
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      const BigInt& lhs = a(i, t);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const BigInt& rhs = b(t, j);
        if (rhs == 0) continue;
        if (lhs == 1)
          c(i, j) += rhs;
        else
          c(i, j) += lhs * rhs;
      }
    }
  }
  return c;
}

SquareMatrix invert_unit_upper_triangular(const SquareMatrix& m) {
  if (!m.is_unit_upper_triangular()) throw Error("matrix is not unit upper-triangular");
  const std::size_t n = m.size();
  SquareMatrix inv = SquareMatrix::identity(n);
  // Row i of the inverse: inv(i,j) = -sum_{i<=t<j} inv(i,t) m(t,j).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t t = i; t < j; ++t) {
        const BigInt& x = inv(i, t);
        if (x == 0) continue;
        const BigInt& y = m(t, j);
        if (y == 0) continue;
        acc += (y == 1) ? x : x * y;
      }
      inv(i, j) = -acc;
    }
  }
  return inv;
}

}  // namespace cobweb

#pragma once

#include "cobweb/bigint.hpp"
#include "cobweb/sequence.hpp"

#include <cstddef>
#include <vector>

namespace cobweb {

/// Reduced fraction F_n! / (F_k! F_{n-k}!). Integral iff denominator == 1.
struct FNomialQuotient {
  BigInt numerator;
  BigInt denominator;

  bool is_integer() const { return denominator == 1; }
};

/// Cached F-factorials n_F! = F_n F_{n-1} ... F_1 for 0 <= n <= max_n, with
/// 0_F! = 1. The cache is filled on construction and never mutated after.
class FNomialTable {
 public:
  FNomialTable(Sequence seq, std::size_t max_n);

  const Sequence& sequence() const noexcept { return seq_; }
  std::size_t max_n() const noexcept { return max_n_; }

  /// F_n from the cache.
  const BigInt& value(std::size_t n) const;

  const BigInt& f_factorial(std::size_t n) const;

  /// Falling F-factorial F_n F_{n-1} ... F_{n-k+1}, as an explicit product.
  BigInt falling(std::size_t n, std::size_t k) const;

  /// (n k)_F as a reduced fraction. k > n is an error, not zero.
  FNomialQuotient fnomial(std::size_t n, std::size_t k) const;

  /// (n k)_F, throwing NotAdmissible when the quotient is not integral.
  BigInt fnomial_integer(std::size_t n, std::size_t k) const;

 private:
  void check_index(std::size_t n) const;

  Sequence seq_;
  std::size_t max_n_;
  std::vector<BigInt> values_;
  std::vector<BigInt> factorials_;
};

}  // namespace cobweb

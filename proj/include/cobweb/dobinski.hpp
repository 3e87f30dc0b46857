#pragma once

#include "cobweb/bigint.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <vector>

namespace cobweb {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Stirling numbers of the second kind S(n,k), 0 <= k <= n <= max_n, from
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t max_n);

  std::size_t max_n() const noexcept { return rows_.size() - 1; }
  const BigInt& operator()(std::size_t n, std::size_t k) const;
  BigInt row_sum(std::size_t n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling2(std::size_t n, std::size_t k);
BigInt bell_exact(std::size_t n);

struct DobinskiResult {
  BigFloat value;
  std::size_t terms = 0;  // k = 0 .. terms-1 were summed
  BigFloat tail_bound;    // bound on the omitted tail, already scaled by 1/e
};

/// e^{-1} sum_{k>=0} k^n / k!, truncated once a geometric bound on the tail
/// falls below rel_tol times the partial sum. Throws Error if that does not
/// happen within max_terms.
DobinskiResult bell_dobinski(std::size_t n, double rel_tol, std::size_t max_terms = 100'000);

}  // namespace cobweb

#include "cobweb/dobinski.hpp"

#include "cobweb/errors.hpp"

namespace cobweb {

StirlingTable::StirlingTable(std::size_t max_n) : rows_(max_n + 1) {
  rows_[0] = {BigInt(1)};
  for (std::size_t n = 1; n <= max_n; ++n) {
    rows_[n].assign(n + 1, BigInt(0));
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt v = rows_[n - 1][k - 1];
      if (k <= n - 1) v += k * rows_[n - 1][k];
      rows_[n][k] = std::move(v);
    }
  }
}

const BigInt& StirlingTable::operator()(std::size_t n, std::size_t k) const {
  if (n > max_n() || k > n)
    throw IndexOutOfRange("S(" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside 0 <= k <= n <= " + std::to_string(max_n()));
  return rows_[n][k];
}

BigInt StirlingTable::row_sum(std::size_t n) const {
  if (n > max_n()) throw IndexOutOfRange("row " + std::to_string(n) + " beyond table");
  BigInt sum = 0;
  for (const auto& v : rows_[n]) sum += v;
  return sum;
}

BigInt stirling2(std::size_t n, std::size_t k) { return StirlingTable(n)(n, k); }

BigInt bell_exact(std::size_t n) { return StirlingTable(n).row_sum(n); }

DobinskiResult bell_dobinski(std::size_t n, double rel_tol, std::size_t max_terms) {
  if (!(rel_tol > 0)) throw Error("relative tolerance must be positive");
  const BigFloat tol(rel_tol);
  BigFloat partial = 0;
  BigFloat term = n == 0 ? BigFloat(1) : BigFloat(0);  // k^n / k! at k = 0
  for (std::size_t k = 0; k < max_terms; ++k) {
    partial += term;
    // t_{k+1}/t_k = (k+1)^{n-1} / k^n for k >= 1; it decreases in k.
    BigFloat next;
    if (k == 0) {
      next = 1;  // 1^n / 1!
    } else {
      next = term * boost::multiprecision::pow(BigFloat(k + 1) / k, n) / (k + 1);
    }
    const BigFloat ratio_after =
        boost::multiprecision::pow(BigFloat(k + 2) / (k + 1), n) / (k + 2);
    if (k >= 1 && ratio_after < 1 && partial > 0) {
      // Tail sum_{j>k} t_j <= t_{k+1} / (1 - r_{k+1}).
      const BigFloat tail = next / (1 - ratio_after);
      if (tail <= tol * partial) {
        const BigFloat inv_e = 1 / boost::multiprecision::exp(BigFloat(1));
        return {partial * inv_e, k + 1, tail * inv_e};
      }
    }
    term = next;
  }
  throw Error("Dobinski series did not reach relative tolerance within " +
              std::to_string(max_terms) + " terms");
}

}  // namespace cobweb

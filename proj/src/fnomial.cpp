#include "cobweb/fnomial.hpp"

#include "cobweb/errors.hpp"

namespace cobweb {

FNomialTable::FNomialTable(Sequence seq, std::size_t max_n)
    : seq_(std::move(seq)), max_n_(max_n) {
  values_.reserve(max_n + 1);
  factorials_.reserve(max_n + 1);
  values_.push_back(0);
  factorials_.push_back(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    values_.push_back(seq_.value(n));
    if (values_.back() < 1)
      throw Error("F_" + std::to_string(n) + " of " + seq_.name() + " is not positive");
    factorials_.push_back(factorials_.back() * values_.back());
  }
}

void FNomialTable::check_index(std::size_t n) const {
  if (n > max_n_)
    throw IndexOutOfRange("index " + std::to_string(n) + " exceeds table bound " +
                          std::to_string(max_n_));
}

const BigInt& FNomialTable::value(std::size_t n) const {
  check_index(n);
  return values_[n];
}

const BigInt& FNomialTable::f_factorial(std::size_t n) const {
  check_index(n);
  return factorials_[n];
}

BigInt FNomialTable::falling(std::size_t n, std::size_t k) const {
  check_index(n);
  if (k > n)
    throw Error("falling factorial needs k <= n, got n=" + std::to_string(n) +
                " k=" + std::to_string(k));
  BigInt product = 1;
  for (std::size_t i = 0; i < k; ++i) product *= values_[n - i];
  return product;
}

FNomialQuotient FNomialTable::fnomial(std::size_t n, std::size_t k) const {
  check_index(n);
  if (k > n)
    throw Error("F-nomial needs k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  BigInt num = falling(n, k);
  const BigInt& den = factorials_[k];
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder == 0) return {quotient, 1};
  BigInt g = boost::multiprecision::gcd(num, den);
  return {num / g, den / g};
}

BigInt FNomialTable::fnomial_integer(std::size_t n, std::size_t k) const {
  FNomialQuotient q = fnomial(n, k);
  if (!q.is_integer()) throw NotAdmissible(n, k, q.numerator, q.denominator);
  return q.numerator;
}

}  // namespace cobweb

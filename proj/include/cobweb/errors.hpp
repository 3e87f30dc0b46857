#pragma once

#include "cobweb/bigint.hpp"

#include <stdexcept>
#include <string>

namespace cobweb {

// Domain errors. The CLI maps these to exit status 1, except where noted.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed sequence spec or other user input; CLI exit status 2.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A quotient F_n!/(F_k! F_{n-k}!) that is not an integer.
class NotAdmissible : public Error {
 public:
  NotAdmissible(std::size_t n, std::size_t k, BigInt num, BigInt den)
      : Error("sequence is not cobweb-admissible: (" + std::to_string(n) + " " +
              std::to_string(k) + ")_F = " + num.str() + "/" + den.str()),
        n_(n), k_(k), numerator_(std::move(num)), denominator_(std::move(den)) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const BigInt& numerator() const noexcept { return numerator_; }
  const BigInt& denominator() const noexcept { return denominator_; }

 private:
  std::size_t n_, k_;
  BigInt numerator_, denominator_;
};

// A configured size limit would be exceeded. Carries the exact predicted size
// when it is known. CLI exit status 3.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, BigInt predicted)
      : Error(what + " (predicted size " + predicted.str() + ")"),
        predicted_(std::move(predicted)) {}

  const BigInt& predicted() const noexcept { return predicted_; }

 private:
  BigInt predicted_;
};

}  // namespace cobweb

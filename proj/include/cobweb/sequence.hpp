#pragma once

#include "cobweb/bigint.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cobweb {

enum class SequenceKind { Natural, Fibonacci, Constant, Gaussian, Even1, Odd, Div3, List };

/// A positive integer sequence F_1, F_2, ... with the convention F_0 = 0.
///
/// Values are a pure function of the index. Built-in families evaluate on
/// demand; explicit lists are indexed from 1 and must not contain zeros.
class Sequence {
 public:
  /// Parses the sequence mini-language: `nat`, `fib`, `const:<c>`,
  /// `gauss:<q>`, `even1`, `odd`, `div3`, `list:[v1,v2,...]`.
  /// Case-sensitive; whitespace inside `list:[...]` is ignored.
  static Sequence parse(std::string_view spec);

  static Sequence natural();
  static Sequence fibonacci();
  static Sequence constant(BigInt c);
  static Sequence gaussian(unsigned long q);
  static Sequence even1();
  static Sequence odd();
  static Sequence div3();
  static Sequence list(std::vector<BigInt> values);

  const std::string& name() const noexcept { return name_; }
  SequenceKind kind() const noexcept { return kind_; }

  /// F_n. value(0) is 0 for every sequence.
  BigInt value(std::size_t n) const;

  /// Number of defined terms for explicit lists; nullopt for infinite families.
  std::optional<std::size_t> length() const;

  /// One representative of every built-in family, as used by the property
  /// tests and the acceptance suite.
  static std::vector<Sequence> builtins();

 private:
  Sequence(SequenceKind kind, std::string name, BigInt param = 0,
           std::vector<BigInt> values = {})
      : kind_(kind), name_(std::move(name)), param_(std::move(param)),
        values_(std::move(values)) {}

  SequenceKind kind_;
  std::string name_;
  BigInt param_;                // c for const, q for gauss
  std::vector<BigInt> values_;  // explicit list, values_[0] is F_1
};

struct AdmissibilityFailure {
  std::size_t n = 0;
  std::size_t k = 0;
  BigInt numerator;    // reduced
  BigInt denominator;  // reduced, > 1
};

struct AdmissibilityVerdict {
  std::size_t bound = 0;            // requested N
  std::size_t admissible_up_to = 0; // largest N' <= bound with every pair integral
  std::optional<AdmissibilityFailure> first_failure;

  bool admissible() const noexcept { return !first_failure.has_value(); }
};

/// Checks that (n k)_F is a nonnegative integer for all 0 <= k <= n <= bound,
/// scanning n ascending then k ascending. Exact arithmetic throughout.
AdmissibilityVerdict check_cobweb_admissible(const Sequence& seq, std::size_t bound);

struct GcdFailure {
  std::size_t n = 0;
  std::size_t m = 0;
  BigInt gcd_of_values;  // GCD(F_n, F_m)
  BigInt value_at_gcd;   // F_{GCD(n,m)}
};

struct GcdVerdict {
  std::size_t bound = 0;
  std::size_t morphic_up_to = 0;
  std::optional<GcdFailure> first_failure;  // row-major: n ascending, then m
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;

  bool morphic() const noexcept { return !first_failure.has_value(); }
};

/// Checks GCD(F_n, F_m) = F_{GCD(n, m)} for all 1 <= m <= n <= bound.
GcdVerdict check_gcd_morphic(const Sequence& seq, std::size_t bound);

}  // namespace cobweb

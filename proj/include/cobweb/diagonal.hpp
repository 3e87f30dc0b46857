#pragma once

#include "cobweb/bigint.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/sequence.hpp"

#include <cstddef>
#include <vector>

namespace cobweb {

/// The F-dependent poset P(n,F): one ranked item per layer
/// <Phi_l -> Phi_{n-l}>, rank l, for every l with 2l <= n. The item of rank l
/// stands for (n-l l)_F max-disjoint copies of P_{n-2l}.
class DiagonalPoset {
 public:
  DiagonalPoset(Sequence seq, std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const Sequence& sequence() const noexcept { return table_.sequence(); }

  /// Highest rank with a nonempty layer: floor(n/2).
  std::size_t max_rank() const noexcept { return n_ / 2; }

  /// W_k = S(n,k,F) = (n-k k)_F for 2k <= n, else 0.
  BigInt whitney(std::size_t k) const;

  /// Sum of whitney(k) over k >= 0.
  BigInt bell() const;

 private:
  std::size_t n_;
  FNomialTable table_;
};

/// Free-function forms. All throw NotAdmissible, carrying the first failing
/// pair, if the sequence is not cobweb-admissible up to n.
BigInt diagonal_whitney(std::size_t n, std::size_t k, const Sequence& seq);
BigInt diagonal_bell(std::size_t n, const Sequence& seq);

/// B_0(F), ..., B_N(F).
std::vector<BigInt> diagonal_bell_sequence(const Sequence& seq, std::size_t max_n);

/// Rows n = 0..N of S(n,k,F) for k = 0..floor(n/2).
std::vector<std::vector<BigInt>> diagonal_whitney_triangle(const Sequence& seq, std::size_t max_n);

}  // namespace cobweb

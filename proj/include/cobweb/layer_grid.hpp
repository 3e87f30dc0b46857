#pragma once

#include "cobweb/bigint.hpp"
#include "cobweb/incidence.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cobweb {

/// Layer p_{l,m} = <Phi_l -> Phi_m>, identified by its pair of levels.
struct Layer {
  std::size_t l = 0;
  std::size_t m = 0;

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// The interval of layers below p_{k,n}: all (l,m) with 0 <= l <= k and
/// l < m <= n, ordered componentwise. Graded by rank(l,m) = l + m - 1 with
/// bottom (0,1).
///
/// When k = n the pair (n,n) is not a layer, so the top element is (n-1,n).
class LayerGridPoset {
 public:
  LayerGridPoset(std::size_t k, std::size_t n);

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }

  /// Elements sorted by rank, then by l. This is a linear extension.
  const std::vector<Layer>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(const Layer& p) const noexcept;
  bool leq(const Layer& a, const Layer& b) const noexcept { return a.l <= b.l && a.m <= b.m; }
  std::optional<std::size_t> index_of(const Layer& p) const noexcept;

  static std::size_t rank(const Layer& p) noexcept { return p.l + p.m - 1; }
  /// Rank of the top element; nullopt for the empty grid (n = 0).
  std::optional<std::size_t> top_rank() const noexcept;

  SquareMatrix zeta() const;
  SquareMatrix mobius() const;

 private:
  std::size_t k_, n_;
  std::vector<Layer> elements_;
};

/// (n-k)(k+1) + k(k+1)/2.
BigInt grid_size(std::size_t k, std::size_t n);

/// Number of maximal chains of the grid, counted as monotone lattice paths
/// from (0,1) to the top element inside l < m.
BigInt count_grid_max_chains(std::size_t k, std::size_t n);

/// Classical ballot number: paths from (0,0) to (a,b), a <= b, never
/// crossing the diagonal, (b+1-a)/(b+1) * C(a+b, a).
BigInt ballot_number(std::size_t a, std::size_t b);

/// Whitney numbers of the second kind: elements of rank r. Zero off-range.
BigInt whitney_second(std::size_t k, std::size_t n, std::size_t r);

/// Whitney numbers of the first kind: sum of mu(bottom, pi) over rank r.
BigInt whitney_first(std::size_t k, std::size_t n, std::size_t r);

/// Both triangle rows, indexed by rank 0..top_rank.
struct WhitneyRows {
  std::vector<BigInt> second_kind;
  std::vector<BigInt> first_kind;
};
WhitneyRows whitney_rows(std::size_t k, std::size_t n);

/// Sum over ranks of whitney_second.
BigInt bell_like(std::size_t k, std::size_t n);

}  // namespace cobweb

#pragma once

#include "cobweb/bigint.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cobweb {

/// Vertex <j,p>: the j-th vertex (1-based) of level p.
struct Vertex {
  std::uint64_t index = 1;
  std::size_t level = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

/// A saturated chain through consecutive levels from..to, stored as the
/// per-level vertex indices (1-based), lowest level first.
using LevelChain = std::vector<std::uint64_t>;

inline constexpr std::size_t kDefaultMatrixVertexLimit = 2000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Finite truncation P_m of the cobweb poset: level 0 is the single root
/// <1,0>, level p in 1..m holds F_p vertices, and every vertex of level p is
/// covered by every vertex of level p+1. Edges are implied by the levels and
/// never stored.
class CobwebPoset {
 public:
  static CobwebPoset build(const Sequence& seq, std::size_t max_level);

  const Sequence& sequence() const noexcept { return seq_; }
  std::size_t max_level() const noexcept { return level_sizes_.size() - 1; }
  std::uint64_t level_size(std::size_t level) const;
  const std::vector<std::uint64_t>& level_sizes() const noexcept { return level_sizes_; }
  BigInt vertex_count() const;

  bool contains(const Vertex& v) const noexcept;
  bool leq(const Vertex& u, const Vertex& v) const;
  bool covers(const Vertex& lower, const Vertex& upper) const;

  /// Vertices in level-major, index-ascending order. Throws BudgetExceeded
  /// above `limit` vertices.
  std::vector<Vertex> vertices(std::size_t limit = kDefaultMatrixVertexLimit) const;

  /// Position of v in the order returned by vertices().
  std::uint64_t position(const Vertex& v) const;

 private:
  CobwebPoset(Sequence seq, std::vector<std::uint64_t> sizes)
      : seq_(std::move(seq)), level_sizes_(std::move(sizes)) {}

  void require(const Vertex& v) const;

  Sequence seq_;
  std::vector<std::uint64_t> level_sizes_;
};

/// An element of the incidence algebra over the poset's level-major order.
struct IncidenceMatrix {
  std::vector<Vertex> order;
  SquareMatrix entries;
};

IncidenceMatrix zeta_matrix(const CobwebPoset& poset,
                            std::size_t limit = kDefaultMatrixVertexLimit);

/// mu = zeta^{-1}, by back-substitution on the unit upper-triangular zeta.
IncidenceMatrix mobius_matrix(const CobwebPoset& poset,
                              std::size_t limit = kDefaultMatrixVertexLimit);

/// Number of chains x_1 < ... < x_t: the entry sum of (zeta - I)^{t-1}.
BigInt count_chains_of_length(const CobwebPoset& poset, std::size_t t,
                              std::size_t limit = kDefaultMatrixVertexLimit);

/// Saturated chains meeting each level from..to exactly once: the product of
/// the level sizes. From the root this is n_F!.
BigInt count_max_chains(const CobwebPoset& poset, std::size_t from_level, std::size_t to_level);

/// Streams the saturated chains between two levels in lexicographic order.
class MaxChainCursor {
 public:
  /// Throws BudgetExceeded (carrying the exact count) if there are more than
  /// `budget` chains.
  MaxChainCursor(const CobwebPoset& poset, std::size_t from_level, std::size_t to_level,
                 std::uint64_t budget = kDefaultEnumerationBudget);

  /// Writes the next chain into `out`; false once exhausted.
  bool next(LevelChain& out);

  std::size_t from_level() const noexcept { return from_; }

 private:
  std::vector<std::uint64_t> radix_;
  LevelChain current_;
  std::size_t from_;
  bool done_ = false;
};

std::vector<LevelChain> enumerate_max_chains(const CobwebPoset& poset, std::size_t from_level,
                                             std::size_t to_level,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

/// Text dump: a `# order: <j,p> ...` header, then one row per line with
/// space-separated decimal entries. `leading` truncates to that many rows and
/// columns (0 keeps the full matrix).
void write_matrix(std::ostream& os, const IncidenceMatrix& m, std::size_t leading = 0);

}  // namespace cobweb

#pragma once

#include "cobweb/bigint.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/errors.hpp"
#include "cobweb/exact_cover.hpp"
#include "cobweb/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cobweb {

enum class SigmaPolicy { IdentityOnly, AllPermutations };

std::string to_string(SigmaPolicy policy);
SigmaPolicy parse_sigma_policy(std::string_view text);

/// A candidate copy sigma P_m inside the layer <Phi_k -> Phi_n>: one root in
/// level k and, for each level k+i, a subset A_i of size sizes[i-1]. Its
/// chain set is the full product {root} x A_1 x ... x A_m.
struct Block {
  std::uint64_t root = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<std::uint64_t>> level_subsets;
  std::vector<std::size_t> chains;  // sorted indices into the universe
};

struct TilingBudget {
  std::uint64_t max_universe = 100'000;
  std::uint64_t max_blocks = 1'000'000;
};

/// Exact-cover form of the layer partition question. The universe is the
/// set of saturated chains through levels k..n, in lexicographic order.
class TilingInstance {
 public:
  /// Throws NotAdmissible if seq is not cobweb-admissible up to n, and
  /// BudgetExceeded (with the exact size) before enumerating anything too big.
  static TilingInstance build(const Sequence& seq, std::size_t k, std::size_t n,
                              SigmaPolicy policy = SigmaPolicy::AllPermutations,
                              const TilingBudget& budget = {});

  const Sequence& sequence() const noexcept { return poset_.sequence(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return n_ - k_; }
  SigmaPolicy policy() const noexcept { return policy_; }

  const std::vector<LevelChain>& universe() const noexcept { return universe_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// m_F!, the number of chains in every block.
  std::uint64_t block_chain_count() const noexcept { return block_chain_count_; }
  /// Blocks in any exact cover: |universe| / m_F!.
  std::size_t cover_size() const noexcept { return universe_.size() / block_chain_count_; }

  std::size_t chain_index(const LevelChain& chain) const;

  ExactCoverProblem exact_cover() const;

 private:
  TilingInstance(CobwebPoset poset, std::size_t k, std::size_t n, SigmaPolicy policy)
      : poset_(std::move(poset)), k_(k), n_(n), policy_(policy) {}

  CobwebPoset poset_;
  std::size_t k_, n_;
  SigmaPolicy policy_;
  std::vector<LevelChain> universe_;
  std::vector<std::uint64_t> strides_;
  std::vector<Block> blocks_;
  std::uint64_t block_chain_count_ = 1;
};

/// Number of candidate blocks the instance would hold, computed without
/// generating them.
BigInt predicted_block_count(const Sequence& seq, std::size_t k, std::size_t n,
                             SigmaPolicy policy);

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct SolveOptions {
  unsigned jobs = 1;
  std::uint64_t node_budget_per_branch = 10'000'000;  // 0: unlimited
  // Report the lexicographically least cover. If that search runs out of
  // budget, the first cover in branch order is reported instead.
  bool canonical_witness = false;
};

struct PartitionResult {
  Verdict verdict = Verdict::No;
  std::optional<std::vector<std::size_t>> witness;  // sorted block indices
};

PartitionResult exists_partition(const TilingInstance& instance, const SolveOptions& options = {});

struct PartitionCount {
  std::uint64_t count = 0;
  bool at_least = false;      // count == cap and there may be more
  bool inconclusive = false;  // budget ran out; count is a lower bound
};

/// Number of exact covers, counted up to `cap` (0: no cap).
PartitionCount count_partitions(const TilingInstance& instance, std::uint64_t cap,
                                const SolveOptions& options = {});

/// True iff the blocks are pairwise chain-disjoint and cover the universe.
/// Throws ForeignBlock for an index that is not a candidate of the instance.
bool verify_partition(const TilingInstance& instance, std::span<const std::size_t> block_ids);

/// As above, for blocks given by their chain sets (as in witness files).
bool verify_partition(const TilingInstance& instance,
                      const std::vector<std::vector<std::size_t>>& chain_sets);

class ForeignBlock : public Error {
 public:
  using Error::Error;
};

}  // namespace cobweb

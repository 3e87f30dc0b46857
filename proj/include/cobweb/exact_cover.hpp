#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cobweb {

/// Items 0..item_count-1 and a list of options, each a set of items.
struct ExactCoverProblem {
  std::size_t item_count = 0;
  std::vector<std::vector<std::uint32_t>> options;
};

enum class SearchStatus {
  Complete,         // search space exhausted
  SolutionLimit,    // stopped after max_solutions
  BudgetExhausted,  // node budget ran out first
};

struct SearchLimits {
  std::uint64_t max_solutions = 0;  // 0: unlimited
  std::uint64_t node_budget = 0;    // 0: unlimited
};

struct SearchResult {
  std::uint64_t solutions = 0;
  std::optional<std::vector<std::size_t>> first_solution;  // sorted option indices
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes = 0;
};

/// Knuth's Algorithm X on a toroidal doubly linked matrix. Branches on the
/// active item with the fewest options (lowest index on ties) and tries its
/// options in ascending index order, so the search order is deterministic.
class DancingLinks {
 public:
  /// `allowed`, when given, restricts the options that take part.
  explicit DancingLinks(const ExactCoverProblem& problem,
                        const std::vector<bool>* allowed = nullptr);

  /// Commits to an option before searching. False if it overlaps an item
  /// that is already covered or is not part of the matrix.
  bool select(std::size_t option);

  /// The item the search would branch on next and its options, in order.
  /// Empty when every item is covered.
  std::optional<std::size_t> branch_item() const;
  std::vector<std::size_t> options_of(std::size_t item) const;

  SearchResult search(const SearchLimits& limits, bool record_first = true);

 private:
  void cover(std::uint32_t column);
  void uncover(std::uint32_t column);
  std::uint32_t choose_column() const;

  // Node 0 is the root header, nodes 1..item_count are column headers.
  std::vector<std::uint32_t> left_, right_, up_, down_, column_;
  std::vector<std::uint32_t> option_of_;  // option index of each body node
  std::vector<std::uint32_t> size_;       // per column header
  std::vector<bool> option_present_;
  std::vector<std::uint32_t> option_first_;  // first body node of each option
  std::vector<std::size_t> selected_;
};

struct CoverOptions {
  std::uint64_t max_solutions = 0;           // 0: count everything
  std::uint64_t node_budget_per_branch = 0;  // 0: unlimited
  unsigned jobs = 1;
};

struct CoverOutcome {
  std::uint64_t solutions = 0;  // min(total, max_solutions) when capped
  bool capped = false;          // reached max_solutions
  bool inconclusive = false;    // some branch ran out of budget and the cap was not reached
  std::optional<std::vector<std::size_t>> witness;
  std::uint64_t nodes = 0;
};

/// Splits the search at the root branching item and runs the branches either
/// in order or on `jobs` worker threads. Counts, verdicts and the witness
/// (taken from the lowest branch that has a cover) are identical for every
/// value of `jobs`.
CoverOutcome find_covers(const ExactCoverProblem& problem, const CoverOptions& options);

enum class LeastCoverStatus { Found, NoCover, Inconclusive };

struct LeastCover {
  LeastCoverStatus status = LeastCoverStatus::NoCover;
  std::vector<std::size_t> options;  // sorted
};

/// The lexicographically least cover, as a sorted list of option indices.
LeastCover least_cover(const ExactCoverProblem& problem, std::uint64_t node_budget_per_call = 0);

/// True iff `chosen` are valid option indices, pairwise disjoint and covering
/// every item.
bool is_exact_cover(const ExactCoverProblem& problem, std::span<const std::size_t> chosen);

}  // namespace cobweb

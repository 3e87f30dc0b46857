#include "cobweb/tiling.hpp"

#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace cobweb {

std::string to_string(SigmaPolicy policy) {
  return policy == SigmaPolicy::IdentityOnly ? "identity" : "all";
}

SigmaPolicy parse_sigma_policy(std::string_view text) {
  if (text == "identity") return SigmaPolicy::IdentityOnly;
  if (text == "all") return SigmaPolicy::AllPermutations;
  throw ParseError("sigma policy must be 'all' or 'identity', got '" + std::string(text) + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Level-size vectors a block may use: the identity arrangement of
// F_1..F_m first, then every other distinct arrangement in lexicographic order.
std::vector<std::vector<std::uint64_t>> size_arrangements(const std::vector<std::uint64_t>& base,
                                                          SigmaPolicy policy) {
  std::vector<std::vector<std::uint64_t>> out{base};
  if (policy == SigmaPolicy::IdentityOnly) return out;
  std::vector<std::uint64_t> perm = base;
  std::sort(perm.begin(), perm.end());
  do {
    if (perm != base) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::uint64_t> small_values(const Sequence& seq, std::size_t from, std::size_t to) {
  std::vector<std::uint64_t> out;
  for (std::size_t p = from; p <= to; ++p) {
    BigInt v = seq.value(p);
    if (v > BigInt(std::numeric_limits<std::uint32_t>::max()))
      throw BudgetExceeded("F_" + std::to_string(p) + " too large for a tiling instance", v);
    out.push_back(v.convert_to<std::uint64_t>());
  }
  return out;
}

// All size-s subsets of {1..n}, each sorted, in lexicographic order.
std::vector<std::vector<std::uint64_t>> combinations(std::uint64_t n, std::uint64_t s) {
  std::vector<std::vector<std::uint64_t>> out;
  if (s > n) return out;
  std::vector<std::uint64_t> c(s);
  for (std::uint64_t i = 0; i < s; ++i) c[i] = i + 1;
  while (true) {
    out.push_back(c);
    std::size_t i = s;
    while (i > 0 && c[i - 1] == n - s + i) --i;
    if (i == 0) return out;
    ++c[i - 1];
    for (std::size_t j = i; j < s; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

BigInt predicted_block_count(const Sequence& seq, std::size_t k, std::size_t n,
                             SigmaPolicy policy) {
  if (k >= n) throw Error("tiling needs k < n");
  const std::size_t m = n - k;
  const auto base = small_values(seq, 1, m);
  const auto level = small_values(seq, k + 1, n);
  const BigInt roots = k == 0 ? BigInt(1) : seq.value(k);
  BigInt total = 0;
  for (const auto& sizes : size_arrangements(base, policy)) {
    BigInt product = roots;
    for (std::size_t i = 0; i < m; ++i) product *= binomial(level[i], sizes[i]);
    total += product;
  }
  return total;
}

TilingInstance TilingInstance::build(const Sequence& seq, std::size_t k, std::size_t n,
                                     SigmaPolicy policy, const TilingBudget& budget) {
  if (k >= n)
    throw Error("tiling needs k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  const AdmissibilityVerdict verdict = check_cobweb_admissible(seq, n);
  if (const auto& f = verdict.first_failure)
    throw NotAdmissible(f->n, f->k, f->numerator, f->denominator);

  TilingInstance inst(CobwebPoset::build(seq, n), k, n, policy);
  const std::size_t m = n - k;

  const BigInt universe_size = count_max_chains(inst.poset_, k, n);
  if (universe_size > budget.max_universe)
    throw BudgetExceeded("tiling universe over budget", universe_size);
  const BigInt block_total = predicted_block_count(seq, k, n, policy);
  if (block_total > budget.max_blocks)
    throw BudgetExceeded("candidate blocks over budget", block_total);

  const FNomialTable table(seq, m);
  inst.block_chain_count_ = table.f_factorial(m).convert_to<std::uint64_t>();
  if (universe_size % inst.block_chain_count_ != 0)
    throw Error("universe size " + universe_size.str() + " is not a multiple of m_F! = " +
                std::to_string(inst.block_chain_count_));

  inst.universe_ = enumerate_max_chains(inst.poset_, k, n, budget.max_universe);

  // Mixed-radix strides: the universe is lexicographic with level n fastest.
  inst.strides_.assign(m + 1, 1);
  for (std::size_t i = m; i > 0; --i)
    inst.strides_[i - 1] = inst.strides_[i] * inst.poset_.level_size(k + i);

  const auto base = small_values(seq, 1, m);
  const auto level = small_values(seq, k + 1, n);
  const std::uint64_t roots = inst.poset_.level_size(k);

  for (const auto& sizes : size_arrangements(base, policy)) {
    bool fits = true;
    std::vector<std::vector<std::vector<std::uint64_t>>> choices(m);
    for (std::size_t i = 0; i < m && fits; ++i) {
      choices[i] = combinations(level[i], sizes[i]);
      fits = !choices[i].empty();
    }
    if (!fits) continue;

    for (std::uint64_t root = 1; root <= roots; ++root) {
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        Block block;
        block.root = root;
        block.sizes = sizes;
        for (std::size_t i = 0; i < m; ++i) block.level_subsets.push_back(choices[i][pick[i]]);

        // Expand the product {root} x A_1 x ... x A_m into chain indices.
        std::vector<std::size_t> chains{static_cast<std::size_t>((root - 1) * inst.strides_[0])};
        for (std::size_t i = 0; i < m; ++i) {
          std::vector<std::size_t> next;
          next.reserve(chains.size() * block.level_subsets[i].size());
          for (auto c : chains)
            for (auto j : block.level_subsets[i])
              next.push_back(c + static_cast<std::size_t>((j - 1) * inst.strides_[i + 1]));
          chains = std::move(next);
        }
        std::sort(chains.begin(), chains.end());
        block.chains = std::move(chains);
        inst.blocks_.push_back(std::move(block));

        bool wrapped = true;
        for (std::size_t i = m; i-- > 0;) {
          if (++pick[i] < choices[i].size()) {
            wrapped = false;
            break;
          }
          pick[i] = 0;
        }
        if (wrapped) break;
      }
    }
  }
  return inst;
}

std::size_t TilingInstance::chain_index(const LevelChain& chain) const {
  if (chain.size() != m() + 1) throw Error("chain has the wrong number of levels");
  std::size_t index = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] < 1 || chain[i] > poset_.level_size(k_ + i))
      throw IndexOutOfRange("chain vertex index out of range at level " +
                            std::to_string(k_ + i));
    index += static_cast<std::size_t>((chain[i] - 1) * strides_[i]);
  }
  return index;
}

ExactCoverProblem TilingInstance::exact_cover() const {
  ExactCoverProblem problem;
  problem.item_count = universe_.size();
  problem.options.reserve(blocks_.size());
  for (const auto& b : blocks_)
    problem.options.emplace_back(b.chains.begin(), b.chains.end());
  return problem;
}

PartitionResult exists_partition(const TilingInstance& instance, const SolveOptions& options) {
  const ExactCoverProblem problem = instance.exact_cover();
  PartitionResult result;
  if (options.canonical_witness) {
    const LeastCover least = least_cover(problem, options.node_budget_per_branch);
    if (least.status == LeastCoverStatus::Found) {
      result.verdict = Verdict::Yes;
      result.witness = least.options;
      return result;
    }
    if (least.status == LeastCoverStatus::NoCover) {
      result.verdict = Verdict::No;
      return result;
    }
    // Out of budget: fall back to the branch-ordered search below.
  }
  const CoverOutcome outcome =
      find_covers(problem, {1, options.node_budget_per_branch, options.jobs});
  if (outcome.solutions > 0) {
    result.verdict = Verdict::Yes;
    result.witness = outcome.witness;
  } else {
    result.verdict = outcome.inconclusive ? Verdict::Inconclusive : Verdict::No;
  }
  return result;
}

PartitionCount count_partitions(const TilingInstance& instance, std::uint64_t cap,
                                const SolveOptions& options) {
  const CoverOutcome outcome =
      find_covers(instance.exact_cover(), {cap, options.node_budget_per_branch, options.jobs});
  return {outcome.solutions, outcome.capped, outcome.inconclusive};
}

bool verify_partition(const TilingInstance& instance, std::span<const std::size_t> block_ids) {
  for (auto id : block_ids)
    if (id >= instance.blocks().size())
      throw ForeignBlock("block " + std::to_string(id) + " is not a candidate of this instance");
  return is_exact_cover(instance.exact_cover(), block_ids);
}

bool verify_partition(const TilingInstance& instance,
                      const std::vector<std::vector<std::size_t>>& chain_sets) {
  std::map<std::vector<std::size_t>, std::size_t> by_chains;
  for (std::size_t b = 0; b < instance.blocks().size(); ++b)
    by_chains.emplace(instance.blocks()[b].chains, b);
  std::vector<std::size_t> ids;
  for (auto set : chain_sets) {
    std::sort(set.begin(), set.end());
    auto it = by_chains.find(set);
    if (it == by_chains.end())
      throw ForeignBlock("a block in the partition is not a candidate of this instance");
    ids.push_back(it->second);
  }
  return verify_partition(instance, ids);
}

}  // namespace cobweb

#include "cobweb/exact_cover.hpp"

#include "cobweb/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cobweb {

DancingLinks::DancingLinks(const ExactCoverProblem& problem, const std::vector<bool>* allowed)
    : option_present_(problem.options.size(), false), option_first_(problem.options.size(), 0) {
  const auto items = static_cast<std::uint32_t>(problem.item_count);
  const std::uint32_t headers = items + 1;
  left_.resize(headers);
  right_.resize(headers);
  up_.resize(headers);
  down_.resize(headers);
  column_.resize(headers);
  option_of_.assign(headers, 0);
  size_.assign(headers, 0);
  for (std::uint32_t i = 0; i < headers; ++i) {
    left_[i] = i == 0 ? items : i - 1;
    right_[i] = i == items ? 0 : i + 1;
    up_[i] = down_[i] = column_[i] = i;
  }

  for (std::size_t o = 0; o < problem.options.size(); ++o) {
    if (allowed && !(*allowed)[o]) continue;
    const auto& opt = problem.options[o];
    if (opt.empty()) continue;
    option_present_[o] = true;
    const auto first = static_cast<std::uint32_t>(left_.size());
    option_first_[o] = first;
    for (std::size_t t = 0; t < opt.size(); ++t) {
      if (opt[t] >= items) throw Error("exact-cover option refers to a missing item");
      const std::uint32_t col = opt[t] + 1;
      const auto node = static_cast<std::uint32_t>(left_.size());
      left_.push_back(t == 0 ? node : node - 1);
      right_.push_back(first);
      if (t > 0) right_[node - 1] = node;
      left_[first] = node;
      up_.push_back(up_[col]);
      down_.push_back(col);
      down_[up_[col]] = node;
      up_[col] = node;
      column_.push_back(col);
      option_of_.push_back(static_cast<std::uint32_t>(o));
      ++size_[col];
    }
  }
}

void DancingLinks::cover(std::uint32_t c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (std::uint32_t i = down_[c]; i != c; i = down_[i]) {
    for (std::uint32_t j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[column_[j]];
    }
  }
}

void DancingLinks::uncover(std::uint32_t c) {
  for (std::uint32_t i = up_[c]; i != c; i = up_[i]) {
    for (std::uint32_t j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

std::uint32_t DancingLinks::choose_column() const {
  std::uint32_t best = right_[0];
  for (std::uint32_t c = right_[best]; c != 0; c = right_[c])
    if (size_[c] < size_[best]) best = c;
  return best;
}

bool DancingLinks::select(std::size_t option) {
  if (option >= option_present_.size() || !option_present_[option]) return false;
  const std::uint32_t start = option_first_[option];
  std::uint32_t node = start;
  do {
    const std::uint32_t c = column_[node];
    // A covered column is unlinked from the header list.
    bool active = false;
    for (std::uint32_t h = right_[0]; h != 0; h = right_[h])
      if (h == c) active = true;
    if (!active) return false;
    bool linked = false;
    for (std::uint32_t i = down_[c]; i != c; i = down_[i])
      if (i == node) linked = true;
    if (!linked) return false;
    node = right_[node];
  } while (node != start);
  node = start;
  do {
    cover(column_[node]);
    node = right_[node];
  } while (node != start);
  selected_.push_back(option);
  return true;
}

std::optional<std::size_t> DancingLinks::branch_item() const {
  if (right_[0] == 0) return std::nullopt;
  return choose_column() - 1;
}

std::vector<std::size_t> DancingLinks::options_of(std::size_t item) const {
  std::vector<std::size_t> out;
  const auto c = static_cast<std::uint32_t>(item + 1);
  for (std::uint32_t i = down_[c]; i != c; i = down_[i]) out.push_back(option_of_[i]);
  return out;
}

SearchResult DancingLinks::search(const SearchLimits& limits, bool record_first) {
  SearchResult result;
  std::vector<std::uint32_t> choice;  // chosen node per depth
  std::vector<std::uint32_t> header;  // covered column per depth

  auto record = [&] {
    ++result.solutions;
    if (record_first && !result.first_solution) {
      std::vector<std::size_t> sol = selected_;
      for (auto node : choice) sol.push_back(option_of_[node]);
      std::sort(sol.begin(), sol.end());
      result.first_solution = std::move(sol);
    }
  };

  // Iterative Algorithm X. When `descend` is set we are at a fresh search
  // node; otherwise the deepest choice moves on to its next sibling.
  bool descend = true;
  while (true) {
    if (descend) {
      ++result.nodes;
      if (limits.node_budget && result.nodes > limits.node_budget) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
      }
      if (right_[0] == 0) {
        record();
        if (limits.max_solutions && result.solutions >= limits.max_solutions) {
          result.status = SearchStatus::SolutionLimit;
          return result;
        }
        descend = false;
      } else {
        const std::uint32_t c = choose_column();
        if (size_[c] == 0) {
          descend = false;
        } else {
          cover(c);
          header.push_back(c);
          choice.push_back(down_[c]);
          for (std::uint32_t j = right_[choice.back()]; j != choice.back(); j = right_[j])
            cover(column_[j]);
          continue;
        }
      }
    }
    // Backtrack: undo the deepest choice and try the next option in its column.
    while (true) {
      if (choice.empty()) {
        result.status = SearchStatus::Complete;
        return result;
      }
      const std::uint32_t r = choice.back();
      for (std::uint32_t j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
      const std::uint32_t next = down_[r];
      if (next == header.back()) {
        uncover(header.back());
        header.pop_back();
        choice.pop_back();
        continue;
      }
      choice.back() = next;
      for (std::uint32_t j = right_[next]; j != next; j = right_[j]) cover(column_[j]);
      descend = true;
      break;
    }
  }
}

namespace {

struct BranchResult {
  SearchResult search;
  bool ran = false;
};

}  // namespace

CoverOutcome find_covers(const ExactCoverProblem& problem, const CoverOptions& options) {
  CoverOutcome outcome;
  DancingLinks root(problem);
  const auto item = root.branch_item();
  if (!item) {
    // No items: the empty selection is the unique cover.
    outcome.solutions = 1;
    outcome.capped = options.max_solutions == 1;
    outcome.witness = std::vector<std::size_t>{};
    return outcome;
  }
  const std::vector<std::size_t> branches = root.options_of(*item);
  std::vector<BranchResult> results(branches.size());
  const bool exists_only = options.max_solutions == 1;

  auto run_branch = [&](std::size_t b) {
    DancingLinks dlx(problem);
    dlx.select(branches[b]);
    results[b].search = dlx.search({options.max_solutions, options.node_budget_per_branch});
    results[b].ran = true;
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || branches.size() <= 1) {
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < branches.size(); ++b) {
      run_branch(b);
      total += results[b].search.solutions;
      if (options.max_solutions && total >= options.max_solutions) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    // Lowest branch known to contain a cover; in existence mode higher
    // branches need not start.
    std::atomic<std::size_t> first_hit{branches.size()};
    auto worker = [&] {
      while (true) {
        const std::size_t b = next.fetch_add(1);
        if (b >= branches.size()) return;
        if (exists_only && b > first_hit.load()) continue;
        run_branch(b);
        if (results[b].search.solutions > 0) {
          std::size_t seen = first_hit.load();
          while (b < seen && !first_hit.compare_exchange_weak(seen, b)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, branches.size()); ++t)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Merge in branch order so the outcome does not depend on scheduling.
  std::uint64_t total = 0;
  bool budget_hit = false;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (!results[b].ran) continue;
    const SearchResult& r = results[b].search;
    outcome.nodes += r.nodes;
    if (r.status == SearchStatus::BudgetExhausted) budget_hit = true;
    if (r.first_solution && !outcome.witness) outcome.witness = r.first_solution;
    total += r.solutions;
    if (options.max_solutions && total >= options.max_solutions) {
      outcome.capped = true;
      total = options.max_solutions;
      break;
    }
  }
  outcome.solutions = total;
  outcome.inconclusive = !outcome.capped && budget_hit;
  return outcome;
}

LeastCover least_cover(const ExactCoverProblem& problem, std::uint64_t node_budget_per_call) {
  LeastCover result;
  std::vector<bool> covered(problem.item_count, false);
  std::size_t remaining = problem.item_count;
  std::size_t lower = 0;
  std::vector<bool> allowed(problem.options.size(), false);

  while (remaining > 0) {
    bool extended = false;
    for (std::size_t b = lower; b < problem.options.size(); ++b) {
      const auto& opt = problem.options[b];
      if (opt.empty()) continue;
      if (std::any_of(opt.begin(), opt.end(), [&](auto i) { return covered[i]; })) continue;
      // Can the cover be completed using b and options above it only?
      std::fill(allowed.begin(), allowed.end(), false);
      for (auto o : result.options) allowed[o] = true;
      for (std::size_t o = b; o < problem.options.size(); ++o) allowed[o] = true;
      DancingLinks dlx(problem, &allowed);
      for (auto o : result.options) dlx.select(o);
      if (!dlx.select(b)) continue;
      const SearchResult r = dlx.search({1, node_budget_per_call}, false);
      if (r.status == SearchStatus::BudgetExhausted) {
        result.status = LeastCoverStatus::Inconclusive;
        return result;
      }
      if (r.solutions == 0) continue;
      result.options.push_back(b);
      for (auto i : opt) covered[i] = true;
      remaining -= opt.size();
      lower = b + 1;
      extended = true;
      break;
    }
    if (!extended) {
      result.status = LeastCoverStatus::NoCover;
      result.options.clear();
      return result;
    }
  }
  result.status = LeastCoverStatus::Found;
  return result;
}

bool is_exact_cover(const ExactCoverProblem& problem, std::span<const std::size_t> chosen) {
  std::vector<bool> hit(problem.item_count, false);
  std::size_t count = 0;
  for (auto o : chosen) {
    if (o >= problem.options.size()) return false;
    for (auto i : problem.options[o]) {
      if (i >= problem.item_count || hit[i]) return false;
      hit[i] = true;
      ++count;
    }
  }
  return count == problem.item_count;
}

}  // namespace cobweb

#include "cobweb/layer_grid.hpp"

#include "cobweb/errors.hpp"

#include <algorithm>
#include <map>

namespace cobweb {

namespace {

void check_bounds(std::size_t k, std::size_t n) {
  if (k > n)
    throw Error("layer grid needs k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

LayerGridPoset::LayerGridPoset(std::size_t k, std::size_t n) : k_(k), n_(n) {
  check_bounds(k, n);
  for (std::size_t l = 0; l <= k; ++l)
    for (std::size_t m = l + 1; m <= n; ++m) elements_.push_back({l, m});
  std::stable_sort(elements_.begin(), elements_.end(), [](const Layer& a, const Layer& b) {
    return rank(a) != rank(b) ? rank(a) < rank(b) : a.l < b.l;
  });
}

bool LayerGridPoset::contains(const Layer& p) const noexcept {
  return p.l <= k_ && p.l < p.m && p.m <= n_;
}

std::optional<std::size_t> LayerGridPoset::index_of(const Layer& p) const noexcept {
  auto it = std::find(elements_.begin(), elements_.end(), p);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> LayerGridPoset::top_rank() const noexcept {
  if (n_ == 0) return std::nullopt;
  return k_ < n_ ? k_ + n_ - 1 : 2 * n_ - 2;
}

SquareMatrix LayerGridPoset::zeta() const {
  SquareMatrix z(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i; j < size(); ++j)
      if (leq(elements_[i], elements_[j])) z(i, j) = 1;
  return z;
}

SquareMatrix LayerGridPoset::mobius() const { return invert_unit_upper_triangular(zeta()); }

BigInt grid_size(std::size_t k, std::size_t n) {
  check_bounds(k, n);
  return BigInt(n - k) * (k + 1) + BigInt(k) * (k + 1) / 2;
}

BigInt count_grid_max_chains(std::size_t k, std::size_t n) {
  check_bounds(k, n);
  if (n == 0) throw Error("layer grid with n = 0 is empty and has no maximal chains");
  const LayerGridPoset grid(k, n);
  // Elements are in rank order, so both predecessors (l-1,m) and (l,m-1) are
  // finalized before (l,m) is visited.
  std::map<std::pair<std::size_t, std::size_t>, BigInt> paths;
  for (const Layer& p : grid.elements()) {
    BigInt count = 0;
    if (p.l == 0 && p.m == 1) count = 1;
    if (p.l > 0 && grid.contains({p.l - 1, p.m})) count += paths[{p.l - 1, p.m}];
    if (grid.contains({p.l, p.m - 1})) count += paths[{p.l, p.m - 1}];
    paths[{p.l, p.m}] = count;
  }
  const Layer top = k < n ? Layer{k, n} : Layer{n - 1, n};
  return paths[{top.l, top.m}];
}

BigInt ballot_number(std::size_t a, std::size_t b) {
  if (a > b) return 0;
  return BigInt(b + 1 - a) * binomial(a + b, a) / (b + 1);
}

BigInt whitney_second(std::size_t k, std::size_t n, std::size_t r) {
  check_bounds(k, n);
  std::size_t count = 0;
  // Slant r holds the layers with l + m = r + 1.
  for (std::size_t l = 0; l <= k; ++l) {
    if (l > r + 1) break;
    std::size_t m = r + 1 - l;
    if (l < m && m <= n) ++count;
  }
  return count;
}

BigInt whitney_first(std::size_t k, std::size_t n, std::size_t r) {
  const LayerGridPoset grid(k, n);
  if (grid.size() == 0) return 0;
  const SquareMatrix mu = grid.mobius();
  BigInt sum = 0;
  for (std::size_t j = 0; j < grid.size(); ++j)
    if (LayerGridPoset::rank(grid.elements()[j]) == r) sum += mu(0, j);
  return sum;
}

WhitneyRows whitney_rows(std::size_t k, std::size_t n) {
  const LayerGridPoset grid(k, n);
  WhitneyRows rows;
  const auto top = grid.top_rank();
  if (!top) return rows;
  rows.second_kind.assign(*top + 1, BigInt(0));
  rows.first_kind.assign(*top + 1, BigInt(0));
  const SquareMatrix mu = grid.mobius();
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const std::size_t r = LayerGridPoset::rank(grid.elements()[j]);
    rows.second_kind[r] += 1;
    rows.first_kind[r] += mu(0, j);
  }
  return rows;
}

BigInt bell_like(std::size_t k, std::size_t n) {
  check_bounds(k, n);
  BigInt sum = 0;
  for (std::size_t r = 0; r <= k + n; ++r) sum += whitney_second(k, n, r);
  return sum;
}

}  // namespace cobweb

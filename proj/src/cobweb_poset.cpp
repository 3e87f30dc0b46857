#include "cobweb/cobweb_poset.hpp"

#include "cobweb/errors.hpp"

#include <limits>
#include <ostream>

namespace cobweb {

std::string to_string(const Vertex& v) {
  return "<" + std::to_string(v.index) + "," + std::to_string(v.level) + ">";
}

CobwebPoset CobwebPoset::build(const Sequence& seq, std::size_t max_level) {
  std::vector<std::uint64_t> sizes{1};  // the root <1,0>
  sizes.reserve(max_level + 1);
  for (std::size_t p = 1; p <= max_level; ++p) {
    BigInt f = seq.value(p);
    if (f < 1)
      throw Error("level " + std::to_string(p) + " of " + seq.name() + " would be empty");
    if (f > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw BudgetExceeded("level " + std::to_string(p) + " does not fit a 64-bit index", f);
    sizes.push_back(f.convert_to<std::uint64_t>());
  }
  return CobwebPoset(seq, std::move(sizes));
}

std::uint64_t CobwebPoset::level_size(std::size_t level) const {
  if (level > max_level())
    throw IndexOutOfRange("level " + std::to_string(level) + " beyond max level " +
                          std::to_string(max_level()));
  return level_sizes_[level];
}

BigInt CobwebPoset::vertex_count() const {
  BigInt total = 0;
  for (auto s : level_sizes_) total += s;
  return total;
}

bool CobwebPoset::contains(const Vertex& v) const noexcept {
  return v.level <= max_level() && v.index >= 1 && v.index <= level_sizes_[v.level];
}

void CobwebPoset::require(const Vertex& v) const {
  if (!contains(v)) throw IndexOutOfRange("no vertex " + to_string(v) + " in this poset");
}

bool CobwebPoset::leq(const Vertex& u, const Vertex& v) const {
  require(u);
  require(v);
  return u == v || u.level < v.level;
}

bool CobwebPoset::covers(const Vertex& lower, const Vertex& upper) const {
  require(lower);
  require(upper);
  return lower.level + 1 == upper.level;
}

std::vector<Vertex> CobwebPoset::vertices(std::size_t limit) const {
  BigInt count = vertex_count();
  if (count > limit) throw BudgetExceeded("too many vertices to materialize", count);
  std::vector<Vertex> out;
  out.reserve(count.convert_to<std::size_t>());
  for (std::size_t p = 0; p <= max_level(); ++p)
    for (std::uint64_t j = 1; j <= level_sizes_[p]; ++j) out.push_back({j, p});
  return out;
}

std::uint64_t CobwebPoset::position(const Vertex& v) const {
  require(v);
  std::uint64_t offset = 0;
  for (std::size_t p = 0; p < v.level; ++p) offset += level_sizes_[p];
  return offset + (v.index - 1);
}

IncidenceMatrix zeta_matrix(const CobwebPoset& poset, std::size_t limit) {
  IncidenceMatrix m;
  m.order = poset.vertices(limit);
  const std::size_t n = m.order.size();
  m.entries = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (poset.leq(m.order[i], m.order[j])) m.entries(i, j) = 1;
  return m;
}

IncidenceMatrix mobius_matrix(const CobwebPoset& poset, std::size_t limit) {
  IncidenceMatrix zeta = zeta_matrix(poset, limit);
  return {std::move(zeta.order), invert_unit_upper_triangular(zeta.entries)};
}

BigInt count_chains_of_length(const CobwebPoset& poset, std::size_t t, std::size_t limit) {
  if (t == 0) throw Error("chain length must be at least 1");
  const IncidenceMatrix zeta = zeta_matrix(poset, limit);
  const std::size_t n = zeta.order.size();
  // Row vector of ones times (zeta - I)^{t-1}: ends[v] counts chains ending at v.
  std::vector<BigInt> ends(n, BigInt(1));
  for (std::size_t step = 1; step < t; ++step) {
    std::vector<BigInt> next(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (ends[i] == 0) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (zeta.entries(i, j) != 0) next[j] += ends[i] * zeta.entries(i, j);
    }
    ends = std::move(next);
  }
  BigInt total = 0;
  for (const auto& e : ends) total += e;
  return total;
}

BigInt count_max_chains(const CobwebPoset& poset, std::size_t from_level, std::size_t to_level) {
  if (from_level > to_level || to_level > poset.max_level())
    throw IndexOutOfRange("level span " + std::to_string(from_level) + ".." +
                          std::to_string(to_level) + " outside 0.." +
                          std::to_string(poset.max_level()));
  BigInt product = 1;
  for (std::size_t p = from_level; p <= to_level; ++p) product *= poset.level_size(p);
  return product;
}

MaxChainCursor::MaxChainCursor(const CobwebPoset& poset, std::size_t from_level,
                               std::size_t to_level, std::uint64_t budget)
    : from_(from_level) {
  BigInt total = count_max_chains(poset, from_level, to_level);
  if (total > budget) throw BudgetExceeded("maximal-chain enumeration over budget", total);
  for (std::size_t p = from_level; p <= to_level; ++p) radix_.push_back(poset.level_size(p));
  current_.assign(radix_.size(), 1);
}

bool MaxChainCursor::next(LevelChain& out) {
  if (done_) return false;
  out = current_;
  // Odometer with the top level varying fastest gives lexicographic order.
  std::size_t i = current_.size();
  while (i > 0) {
    --i;
    if (current_[i] < radix_[i]) {
      ++current_[i];
      return true;
    }
    current_[i] = 1;
  }
  done_ = true;
  return true;
}

std::vector<LevelChain> enumerate_max_chains(const CobwebPoset& poset, std::size_t from_level,
                                             std::size_t to_level, std::uint64_t budget) {
  MaxChainCursor cursor(poset, from_level, to_level, budget);
  std::vector<LevelChain> chains;
  LevelChain chain;
  while (cursor.next(chain)) chains.push_back(chain);
  return chains;
}

void write_matrix(std::ostream& os, const IncidenceMatrix& m, std::size_t leading) {
  const std::size_t n = leading == 0 ? m.order.size() : leading;
  if (n > m.order.size())
    throw Error("requested " + std::to_string(n) + " rows but the matrix has " +
                std::to_string(m.order.size()));
  os << "# order:";
  for (std::size_t i = 0; i < n; ++i) os << ' ' << to_string(m.order[i]);
  os << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << m.entries(i, j);
    }
    os << '\n';
  }
}

}  // namespace cobweb

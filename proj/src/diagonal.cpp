#include "cobweb/diagonal.hpp"

#include "cobweb/errors.hpp"

namespace cobweb {

namespace {

void require_admissible(const Sequence& seq, std::size_t n) {
  const AdmissibilityVerdict verdict = check_cobweb_admissible(seq, n);
  if (const auto& f = verdict.first_failure)
    throw NotAdmissible(f->n, f->k, f->numerator, f->denominator);
}

}  // namespace

DiagonalPoset::DiagonalPoset(Sequence seq, std::size_t n) : n_(n), table_(seq, n) {
  require_admissible(seq, n);
}

BigInt DiagonalPoset::whitney(std::size_t k) const {
  if (2 * k > n_) return 0;
  return table_.fnomial_integer(n_ - k, k);
}

BigInt DiagonalPoset::bell() const {
  BigInt sum = 0;
  for (std::size_t k = 0; k <= max_rank(); ++k) sum += whitney(k);
  return sum;
}

BigInt diagonal_whitney(std::size_t n, std::size_t k, const Sequence& seq) {
  return DiagonalPoset(seq, n).whitney(k);
}

BigInt diagonal_bell(std::size_t n, const Sequence& seq) { return DiagonalPoset(seq, n).bell(); }

std::vector<BigInt> diagonal_bell_sequence(const Sequence& seq, std::size_t max_n) {
  require_admissible(seq, max_n);
  const FNomialTable table(seq, max_n);
  std::vector<BigInt> out;
  out.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 0; 2 * k <= n; ++k) sum += table.fnomial_integer(n - k, k);
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<std::vector<BigInt>> diagonal_whitney_triangle(const Sequence& seq,
                                                           std::size_t max_n) {
  require_admissible(seq, max_n);
  const FNomialTable table(seq, max_n);
  std::vector<std::vector<BigInt>> rows(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t k = 0; 2 * k <= n; ++k) rows[n].push_back(table.fnomial_integer(n - k, k));
  return rows;
}

}  // namespace cobweb

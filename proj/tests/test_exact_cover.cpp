#include "cobweb/exact_cover.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cobweb;

namespace {

ExactCoverProblem random_problem(std::mt19937& rng) {
  ExactCoverProblem p;
  p.item_count = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
  const std::size_t options = std::uniform_int_distribution<std::size_t>(1, 22)(rng);
  std::bernoulli_distribution take(0.3);
  for (std::size_t o = 0; o < options; ++o) {
    std::vector<std::uint32_t> opt;
    for (std::uint32_t i = 0; i < p.item_count; ++i)
      if (take(rng)) opt.push_back(i);
    if (opt.empty()) opt.push_back(std::uniform_int_distribution<std::uint32_t>(
        0, static_cast<std::uint32_t>(p.item_count - 1))(rng));
    p.options.push_back(opt);
  }
  return p;
}

// Knuth's small example: exactly one cover, options {0, 3, 4}.
ExactCoverProblem knuth_example() {
  return {7, {{2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}}};
}

}  // namespace

TEST_SUITE("exact_cover") {

TEST_CASE("knuth example") {
  DancingLinks dlx(knuth_example());
  const SearchResult r = dlx.search({});
  CHECK(r.solutions == 1);
  CHECK(r.status == SearchStatus::Complete);
  REQUIRE(r.first_solution);
  CHECK(*r.first_solution == std::vector<std::size_t>{0, 3, 4});
  CHECK(is_exact_cover(knuth_example(), *r.first_solution));
  CHECK_FALSE(is_exact_cover(knuth_example(), std::vector<std::size_t>{0, 3}));
  CHECK_FALSE(is_exact_cover(knuth_example(), std::vector<std::size_t>{0, 1, 4}));
  CHECK_FALSE(is_exact_cover(knuth_example(), std::vector<std::size_t>{0, 3, 9}));
}

TEST_CASE("select commits an option and refuses overlaps") {
  DancingLinks dlx(knuth_example());
  CHECK(dlx.select(3));
  CHECK_FALSE(dlx.select(1));  // shares item 0
  CHECK_FALSE(dlx.select(42));
  CHECK(dlx.search({}).solutions == 1);
  DancingLinks wrong(knuth_example());
  CHECK(wrong.select(1));
  CHECK(wrong.search({}).solutions == 0);
}

TEST_CASE("seeded random problems agree with brute force") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const ExactCoverProblem p = random_problem(rng);
    const auto all = oracle::all_exact_covers(p.item_count, p.options);

    DancingLinks dlx(p);
    const SearchResult r = dlx.search({});
    CHECK(r.solutions == all.size());

    const CoverOutcome serial = find_covers(p, {0, 0, 1});
    const CoverOutcome parallel = find_covers(p, {0, 0, 4});
    CHECK(serial.solutions == all.size());
    CHECK(parallel.solutions == serial.solutions);
    CHECK(parallel.witness == serial.witness);
    CHECK_FALSE(serial.inconclusive);

    const CoverOutcome exists = find_covers(p, {1, 0, 4});
    CHECK(exists.solutions == (all.empty() ? 0u : 1u));
    CHECK(exists.witness == serial.witness);
    if (serial.witness) CHECK(is_exact_cover(p, *serial.witness));

    const LeastCover least = least_cover(p);
    if (all.empty()) {
      CHECK(least.status == LeastCoverStatus::NoCover);
    } else {
      CHECK(least.status == LeastCoverStatus::Found);
      CHECK(least.options == *std::min_element(all.begin(), all.end()));
    }
  }
}

TEST_CASE("caps and budgets") {
  // Four items, every singleton and every pair: many covers.
  ExactCoverProblem p{4, {}};
  for (std::uint32_t a = 0; a < 4; ++a) {
    p.options.push_back({a});
    for (std::uint32_t b = a + 1; b < 4; ++b) p.options.push_back({a, b});
  }
  const auto all = oracle::all_exact_covers(p.item_count, p.options);
  // Partitions of four items into blocks of size at most 2.
  CHECK(all.size() == 10);
  CHECK(find_covers(p, {}).solutions == 10);
  const CoverOutcome capped = find_covers(p, {3, 0, 2});
  CHECK(capped.capped);
  CHECK(capped.solutions == 3);
  const CoverOutcome starved = find_covers(p, {0, 1, 1});
  CHECK(starved.inconclusive);
  CHECK(least_cover(p, 1).status == LeastCoverStatus::Inconclusive);
}

TEST_CASE("no items") {
  const CoverOutcome o = find_covers({0, {}}, {});
  CHECK(o.solutions == 1);
  CHECK(o.witness == std::vector<std::size_t>{});
}

}  // TEST_SUITE

#include "cobweb/dobinski.hpp"
#include "cobweb/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace cobweb;

TEST_SUITE("dobinski") {

TEST_CASE("stirling numbers count set partitions") {
  const StirlingTable s(10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto row = oracle::stirling_row(n);
    BigInt total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(s(n, k) == row[k]);
      CHECK(stirling2(n, k) == row[k]);
      total += row[k];
    }
    CHECK(s.row_sum(n) == total);
    CHECK(bell_exact(n) == total);
  }
  CHECK(stirling2(4, 2) == 7);
  CHECK_THROWS_AS(stirling2(5, 7), IndexOutOfRange);
}

TEST_CASE("known Bell numbers") {
  CHECK(bell_exact(0) == 1);
  CHECK(bell_exact(15) == BigInt(1382958545));
  CHECK(bell_exact(25) == BigInt("4638590332229999353"));
}

TEST_CASE("dobinski series converges to the exact value") {
  for (std::size_t n = 0; n <= 25; ++n) {
    const DobinskiResult d = bell_dobinski(n, 1e-12);
    const BigFloat exact(bell_exact(n));
    const BigFloat rel = abs(d.value - exact) / exact;
    CHECK(rel <= BigFloat(1e-12));
    CHECK(d.tail_bound >= 0);
  }
  CHECK_THROWS_AS(bell_dobinski(5, 0.0), Error);
}

TEST_CASE("term budget") {
  CHECK_THROWS_AS(bell_dobinski(60, 1e-30, 5), Error);
}

}  // TEST_SUITE

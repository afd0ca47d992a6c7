#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wdeg/metric.hpp"

using namespace wdeg;

TEST_CASE("validate accepts the discrete metric on four states") {
  RatMatrix d(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) d.at(i, j) = (i == j) ? 0 : 1;
  FiniteMetric m = FiniteMetric::validate(d);
  CHECK(m.size() == 4);
  CHECK(m.dist(0, 3) == Rational(1));
}

TEST_CASE("validate accepts a 2x2 matrix") {
  RatMatrix d(2, 2);
  d.at(0, 1) = 3;
  d.at(1, 0) = 3;
  CHECK(FiniteMetric::validate(d).dist(0, 1) == Rational(3));
}

TEST_CASE("validate reports the violating triple") {
  RatMatrix d(3, 3);
  d.at(0, 1) = d.at(1, 0) = 1;
  d.at(1, 2) = d.at(2, 1) = 1;
  d.at(0, 2) = d.at(2, 0) = 5;
  try {
    FiniteMetric::validate(d);
    FAIL("expected TriangleViolation");
  } catch (const TriangleViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
  }
}

TEST_CASE("validate rejects asymmetric and bad diagonals") {
  RatMatrix d(2, 2);
  d.at(0, 1) = 1;
  d.at(1, 0) = 2;
  CHECK_THROWS_AS(FiniteMetric::validate(d), NotSymmetric);
  RatMatrix e(2, 2);
  e.at(0, 0) = 1;
  e.at(0, 1) = e.at(1, 0) = 1;
  CHECK_THROWS_AS(FiniteMetric::validate(e), NonzeroDiagonal);
  RatMatrix z(2, 2);
  CHECK_THROWS_AS(FiniteMetric::validate(z), NonPositiveOffDiagonal);
}

TEST_CASE("discrete metric") {
  FiniteMetric m = FiniteMetric::discrete(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(m.dist(i, j) == (i == j ? Rational(0) : Rational(1)));
  CHECK(FiniteMetric::discrete(2).dist(0, 1) == Rational(1));
  CHECK_THROWS(FiniteMetric::discrete(1));
}

TEST_CASE("l1 metric") {
  FiniteMetric m = FiniteMetric::l1(5);
  CHECK(m.dist(0, 4) == Rational(4));
  CHECK(m.dist(2, 3) == Rational(1));
  CHECK(FiniteMetric::l1(2).matrix() == FiniteMetric::discrete(2).matrix());
}

TEST_CASE("hamming metric on three binary factors") {
  FiniteMetric m = FiniteMetric::hamming({2, 2, 2});
  REQUIRE(m.size() == 8);
  // Row of state 000 in the lexicographic order 000,001,...,111.
  std::vector<long> row0 = {0, 1, 1, 2, 1, 2, 2, 3};
  for (std::size_t j = 0; j < 8; ++j) CHECK(m.dist(0, j) == Rational(row0[j]));
  CHECK(m.dist(1, 6) == Rational(3));  // 001 vs 110
}

TEST_CASE("hamming special cases") {
  CHECK(FiniteMetric::hamming({2}).matrix() == FiniteMetric::discrete(2).matrix());
  FiniteMetric m = FiniteMetric::hamming({2, 3});
  // (0,0) has index 0; (1,2) has index 5.
  CHECK(m.dist(0, 5) == Rational(2));
}

TEST_CASE("every constructor output passes validate") {
  CHECK_NOTHROW(FiniteMetric::validate(FiniteMetric::discrete(5).matrix()));
  CHECK_NOTHROW(FiniteMetric::validate(FiniteMetric::l1(6).matrix()));
  CHECK_NOTHROW(FiniteMetric::validate(FiniteMetric::hamming({2, 2, 2}).matrix()));
  CHECK_NOTHROW(FiniteMetric::validate(FiniteMetric::hamming({2, 3}).matrix()));
}

TEST_CASE("hamming is invariant under permuting states within one factor") {
  FiniteMetric m = FiniteMetric::hamming({2, 3});
  // Swap values 0 and 2 of the second factor: state (i,j) -> (i, sigma(j)).
  auto sigma = [](std::size_t j) { return j == 0 ? 2 : j == 2 ? 0 : j; };
  auto relabel = [&](std::size_t s) {
    std::size_t i = s / 3, j = s % 3;
    return i * 3 + sigma(j);
  };
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      CHECK(m.dist(relabel(a), relabel(b)) == m.dist(a, b));
}

TEST_CASE("symmetry group of the discrete metric is the full symmetric group") {
  CHECK(FiniteMetric::discrete(4).symmetry_group().size() == 24);
  // The L1 path metric only allows identity and reversal.
  CHECK(FiniteMetric::l1(5).symmetry_group().size() == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittlab/linalg.hpp"

#include "support/test_util.hpp"

#include <random>

using namespace wittlab;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                             int sparsity_percent) {
  std::uniform_int_distribution<int> coin(0, 99);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < sparsity_percent) m.at(r, c) = test::random_rational(rng, 8, 5);
    }
  }
  return m;
}

std::vector<std::vector<Rational>> dense_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

}  // namespace

TEST_CASE("kernel of [1, -1] is spanned by (1, 1)") {
  NullspaceResult ns = nullspace(RationalMatrix::from_rows({{Rational(1), Rational(-1)}}));
  CHECK(ns.rank == 1);
  REQUIRE(ns.nullity() == 1);
  CHECK(ns.basis[0] == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("the identity has an empty kernel") {
  RationalMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
  NullspaceResult ns = nullspace(id);
  CHECK(ns.rank == 3);
  CHECK(ns.nullity() == 0);
}

TEST_CASE("an all-zero matrix is all kernel") {
  NullspaceResult ns = nullspace(RationalMatrix(4, 3));
  CHECK(ns.rank == 0);
  CHECK(ns.nullity() == 3);
}

TEST_CASE("kernel vectors satisfy M v = 0 exactly and are independent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalMatrix m = random_matrix(rng, 8, 6, 55);
    NullspaceResult ns = nullspace(m);
    CHECK(ns.rank + ns.nullity() == m.cols());

    for (const auto& v : ns.basis) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational dot = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) dot += m.at(r, c) * v[c];
        CHECK(dot.is_zero());
      }
    }

    RowSpace span(m.cols());
    for (const auto& v : ns.basis) CHECK(span.insert(v));

    // second route: plain rational Gauss-Jordan
    CHECK(ns.nullity() == test::naive_nullity(dense_rows(m), m.cols()));
    CHECK(rank(m) == test::naive_rank(dense_rows(m)));
  }
}

TEST_CASE("kernel vectors are primitive with positive leading entry") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix m = random_matrix(rng, 5, 7, 45);
    for (const auto& v : nullspace(m).basis) {
      BigInt g = 0;
      int lead = 0;
      for (const auto& x : v) {
        CHECK(x.denominator() == BigInt(1));
        if (!x.is_zero() && lead == 0) lead = x.sign();
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x.numerator()));
      }
      CHECK(lead == 1);
      CHECK(g == BigInt(1));
    }
  }
}

TEST_CASE("solve returns an exact particular solution") {
  // x + y = 3, x - y = 1
  RationalMatrix a = RationalMatrix::from_rows(
      {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  LinearSolveResult r = solve_linear(a, {Rational(3), Rational(1)});
  REQUIRE(r.feasible());
  CHECK((*r.solution)[0] == Rational(2));
  CHECK((*r.solution)[1] == Rational(1));
}

TEST_CASE("infeasible systems come with a verified witness") {
  // x + y = 1, 2x + 2y = 3
  RationalMatrix a = RationalMatrix::from_rows(
      {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
  const std::vector<Rational> b{Rational(1), Rational(3)};
  LinearSolveResult r = solve_linear(a, b);
  CHECK_FALSE(r.feasible());
  REQUIRE(r.infeasibility_witness.has_value());
  const auto& y = *r.infeasibility_witness;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Rational dot = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) dot += y[i] * a.at(i, c);
    CHECK(dot.is_zero());
  }
  Rational yb = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) yb += y[i] * b[i];
  CHECK(yb == Rational(1));
}

TEST_CASE("random consistent and inconsistent systems") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix a = random_matrix(rng, 6, 4, 60);
    // plant a solution so the system is consistent
    std::vector<Rational> x0(a.cols());
    for (auto& v : x0) v = test::random_rational(rng, 6, 4);
    std::vector<Rational> b(a.rows(), Rational(0));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) b[r] += a.at(r, c) * x0[c];
    }
    LinearSolveResult solved = solve_linear(a, b);
    REQUIRE(solved.feasible());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Rational dot = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) dot += a.at(r, c) * (*solved.solution)[c];
      CHECK(dot == b[r]);
    }

    // a perturbed right-hand side is either still consistent or certified
    std::vector<Rational> bb = b;
    bb[0] += 1;
    LinearSolveResult maybe = solve_linear(a, bb);
    if (maybe.feasible()) {
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Rational dot = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) dot += a.at(r, c) * (*maybe.solution)[c];
        CHECK(dot == bb[r]);
      }
    } else {
      REQUIRE(maybe.infeasibility_witness.has_value());
      const auto& y = *maybe.infeasibility_witness;
      Rational yb = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) yb += y[i] * bb[i];
      CHECK(yb == Rational(1));
    }
  }
}

TEST_CASE("row space insert and contains") {
  RowSpace s(3);
  CHECK(s.insert({Rational(1), Rational(2), Rational(0)}));
  CHECK(s.insert({Rational(0), Rational(1), Rational(1)}));
  CHECK_FALSE(s.insert({Rational(1), Rational(3), Rational(1)}));  // sum of the two
  CHECK(s.rank() == 2);
  CHECK(s.contains({Rational(2), Rational(4), Rational(0)}));
  CHECK_FALSE(s.contains({Rational(0), Rational(0), Rational(1)}));
}

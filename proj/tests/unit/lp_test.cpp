#include <gtest/gtest.h>

#include <random>

#include "ambipref/lp.hpp"
#include "support.hpp"

namespace ambipref::lp {
namespace {

using testing::q;

Constraint row(std::vector<Rational> a, Comparator c, Rational b) { return {std::move(a), c, std::move(b)}; }

TEST(Simplex, TinyCases) {
  LinearProgram p{1, {1}, {row({1}, Comparator::LessEqual, 3)}, {}};
  const auto out = solve(p);
  ASSERT_TRUE(std::holds_alternative<Optimal>(out));
  EXPECT_EQ(std::get<Optimal>(out).value, 3);
  EXPECT_EQ(std::get<Optimal>(out).point, std::vector<Rational>{3});

  LinearProgram infeasible{1, {1}, {row({1}, Comparator::GreaterEqual, 1), row({1}, Comparator::LessEqual, 0)}, {}};
  EXPECT_TRUE(std::holds_alternative<Infeasible>(solve(infeasible)));

  LinearProgram unbounded{1, {1}, {row({1}, Comparator::GreaterEqual, 0)}, {}};
  EXPECT_TRUE(std::holds_alternative<Unbounded>(solve(unbounded)));
}

TEST(Simplex, FreeAndBoxedVariables) {
  // maximize -x - y with x free, y in [-2, 5], x + y >= -7/2, x >= -2
  LinearProgram p{2, {-1, -1},
                  {row({1, 1}, Comparator::GreaterEqual, q("-7/2")), row({1, 0}, Comparator::GreaterEqual, -2)},
                  {LinearProgram::free(), LinearProgram::box(-2, 5)}};
  const auto out = solve(p);
  ASSERT_TRUE(std::holds_alternative<Optimal>(out));
  EXPECT_EQ(std::get<Optimal>(out).value, q("7/2"));
  EXPECT_TRUE(satisfies(p, std::get<Optimal>(out).point));
}

TEST(Simplex, DimensionMismatch) {
  LinearProgram p{2, {1}, {}, {}};
  EXPECT_THROW(solve(p), Error);
}

TEST(Feasibility, Segment) {
  const auto pt = feasible_point(2, {row({1, 1}, Comparator::Equal, 1)});
  ASSERT_TRUE(pt);
  EXPECT_EQ((*pt)[0] + (*pt)[1], 1);
  EXPECT_GE((*pt)[0], 0);
  EXPECT_GE((*pt)[1], 0);
  EXPECT_FALSE(feasible_point(1, {row({1}, Comparator::GreaterEqual, 1), row({1}, Comparator::LessEqual, 0)}));
}

// Degenerate program that cycles under the largest-coefficient rule.
TEST(Simplex, BealeCycling) {
  LinearProgram p{4,
                  {q("3/4"), -150, q("1/50"), -6},
                  {row({q("1/4"), -60, q("-1/25"), 9}, Comparator::LessEqual, 0),
                   row({q("1/2"), -90, q("-1/50"), 3}, Comparator::LessEqual, 0),
                   row({0, 0, 1, 0}, Comparator::LessEqual, 1)},
                  {}};
  const auto out = solve(p);
  ASSERT_TRUE(std::holds_alternative<Optimal>(out));
  EXPECT_EQ(std::get<Optimal>(out).value, q("1/20"));
}

// Weak duality on random bounded programs: max c.x s.t. Ax <= b, x >= 0 equals
// min b.y s.t. A^T y >= c, y >= 0.
TEST(Simplex, StrongDualityOnRandomPrograms) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 6), rhs(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 3, n = 2 + (trial / 3) % 3;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
    std::vector<Rational> b(m), c(n);
    for (auto& r : a)
      for (auto& x : r) x = coef(rng);
    for (auto& x : b) x = rhs(rng);
    for (auto& x : c) x = coef(rng);
    LinearProgram primal{n, c, {}, {}};
    for (std::size_t i = 0; i < m; ++i) primal.constraints.push_back(row(a[i], Comparator::LessEqual, b[i]));
    LinearProgram dual{m, {}, {}, {}};
    for (auto& x : b) dual.objective.push_back(-x);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> col(m);
      for (std::size_t i = 0; i < m; ++i) col[i] = a[i][j];
      dual.constraints.push_back(row(col, Comparator::GreaterEqual, c[j]));
    }
    const auto p = solve(primal);
    const auto d = solve(dual);
    // b > 0 keeps x = 0 feasible, so the primal is never infeasible.
    ASSERT_FALSE(std::holds_alternative<Infeasible>(p));
    if (std::holds_alternative<Optimal>(p)) {
      ASSERT_TRUE(std::holds_alternative<Optimal>(d)) << "trial " << trial;
      EXPECT_EQ(std::get<Optimal>(p).value, -std::get<Optimal>(d).value) << "trial " << trial;
    } else {
      EXPECT_TRUE(std::holds_alternative<Infeasible>(d)) << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace ambipref::lp

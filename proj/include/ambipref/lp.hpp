#pragma once

// Exact rational linear programming: two-phase dense-tableau simplex with
// Bland's smallest-index rule, so it always terminates and is deterministic.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ambipref/rational.hpp"

namespace ambipref::lp {

enum class Comparator { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Comparator comparator;
  Rational rhs;
};

struct Bound {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// maximize objective . x subject to constraints and per-variable bounds.
/// Variables without an explicit bound entry default to x >= 0.
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<Bound> bounds;

  static Bound nonnegative() { return {Rational(0), std::nullopt}; }
  static Bound free() { return {}; }
  static Bound box(const Rational& lo, const Rational& hi) { return {lo, hi}; }
};

struct Optimal {
  Rational value;
  std::vector<Rational> point;
};
struct Infeasible {};
struct Unbounded {};

using Outcome = std::variant<Optimal, Infeasible, Unbounded>;

/// Throws Error(DimensionMismatch) on an inconsistent program. An Optimal
/// point is re-verified against every constraint and bound before return.
Outcome solve(const LinearProgram& program);

/// Phase one only: any exact point satisfying constraints and bounds.
std::optional<std::vector<Rational>> feasible_point(std::size_t variables, const std::vector<Constraint>& constraints,
                                                    const std::vector<Bound>& bounds = {});

/// Direct substitution check of constraints and bounds.
bool satisfies(const LinearProgram& program, const std::vector<Rational>& point);

}  // namespace ambipref::lp

#include "ambipref/lp.hpp"

#include <stdexcept>
#include <string>

#include "ambipref/error.hpp"

namespace ambipref::lp {

namespace {

// x_j = offset + sum(sign * y_col) over the standard-form columns it uses.
struct Substitution {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> columns;
};

struct StandardForm {
  std::vector<Substitution> subs;
  std::size_t columns = 0;  // structural y columns
  std::vector<Constraint> rows;
  std::vector<Rational> objective;  // over y
  Rational objective_offset;
};

Bound bound_of(const LinearProgram& program, std::size_t j) {
  if (program.bounds.empty()) return LinearProgram::nonnegative();
  return j < program.bounds.size() ? program.bounds[j] : LinearProgram::nonnegative();
}

void check_dimensions(const LinearProgram& program) {
  if (program.objective.size() != program.variables) {
    throw Error(ErrorCode::DimensionMismatch, "objective length differs from the variable count");
  }
  if (program.bounds.size() > program.variables) {
    throw Error(ErrorCode::DimensionMismatch, "more bounds than variables");
  }
  for (const auto& c : program.constraints) {
    if (c.coefficients.size() != program.variables) {
      throw Error(ErrorCode::DimensionMismatch, "constraint length differs from the variable count");
    }
  }
}

StandardForm standardize(const LinearProgram& program) {
  StandardForm sf;
  sf.subs.resize(program.variables);
  std::vector<std::pair<std::size_t, Rational>> caps;  // y_col <= cap
  for (std::size_t j = 0; j < program.variables; ++j) {
    const Bound b = bound_of(program, j);
    Substitution& sub = sf.subs[j];
    if (b.lower) {
      sub.offset = *b.lower;
      sub.columns.push_back({sf.columns++, 1});
      if (b.upper) caps.emplace_back(sub.columns.front().first, *b.upper - *b.lower);
    } else if (b.upper) {
      sub.offset = *b.upper;
      sub.columns.push_back({sf.columns++, -1});
    } else {
      sub.offset = 0;
      sub.columns.push_back({sf.columns++, 1});
      sub.columns.push_back({sf.columns++, -1});
    }
  }

  auto translate = [&](const Constraint& c) {
    Constraint out;
    out.coefficients.assign(sf.columns, Rational(0));
    out.comparator = c.comparator;
    out.rhs = c.rhs;
    for (std::size_t j = 0; j < program.variables; ++j) {
      if (sgn(c.coefficients[j]) == 0) continue;
      out.rhs -= c.coefficients[j] * sf.subs[j].offset;
      for (const auto& [col, s] : sf.subs[j].columns) out.coefficients[col] += s * c.coefficients[j];
    }
    return out;
  };
  for (const auto& c : program.constraints) sf.rows.push_back(translate(c));
  for (const auto& [col, cap] : caps) {
    Constraint out;
    out.coefficients.assign(sf.columns, Rational(0));
    out.coefficients[col] = 1;
    out.comparator = Comparator::LessEqual;
    out.rhs = cap;
    sf.rows.push_back(std::move(out));
  }

  sf.objective.assign(sf.columns, Rational(0));
  for (std::size_t j = 0; j < program.variables; ++j) {
    sf.objective_offset += program.objective[j] * sf.subs[j].offset;
    for (const auto& [col, s] : sf.subs[j].columns) sf.objective[col] += s * program.objective[j];
  }
  return sf;
}

class Tableau {
 public:
  // Rows: constraints with nonnegative rhs. Column layout:
  // [structural | slack/surplus | artificial | rhs].
  explicit Tableau(const StandardForm& sf) : structural_(sf.columns) {
    std::vector<Constraint> rows = sf.rows;
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (auto& row : rows) {
      if (sgn(row.rhs) < 0) {
        for (auto& a : row.coefficients) a = -a;
        row.rhs = -row.rhs;
        if (row.comparator == Comparator::LessEqual) {
          row.comparator = Comparator::GreaterEqual;
        } else if (row.comparator == Comparator::GreaterEqual) {
          row.comparator = Comparator::LessEqual;
        }
      }
      if (row.comparator != Comparator::Equal) ++slacks;
      if (row.comparator != Comparator::LessEqual) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    width_ = first_artificial_ + artificials;
    cells_.assign(rows.size(), std::vector<Rational>(width_ + 1, Rational(0)));
    basis_.assign(rows.size(), 0);

    std::size_t next_slack = structural_;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < structural_; ++j) cells_[i][j] = rows[i].coefficients[j];
      cells_[i][width_] = rows[i].rhs;
      switch (rows[i].comparator) {
        case Comparator::LessEqual:
          cells_[i][next_slack] = 1;
          basis_[i] = next_slack++;
          break;
        case Comparator::GreaterEqual:
          cells_[i][next_slack++] = -1;
          cells_[i][next_art] = 1;
          basis_[i] = next_art++;
          break;
        case Comparator::Equal:
          cells_[i][next_art] = 1;
          basis_[i] = next_art++;
          break;
      }
    }
  }

  // Returns false when the phase-one optimum is negative.
  bool phase_one() {
    if (first_artificial_ == width_) return true;
    std::vector<Rational> cost(width_, Rational(0));
    for (std::size_t j = first_artificial_; j < width_; ++j) cost[j] = -1;
    const bool bounded = optimize(cost, width_);
    if (!bounded) throw std::logic_error("phase one cannot be unbounded");
    if (sgn(objective_value(cost)) < 0) return false;
    expel_artificials();
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& structural_cost) {
    std::vector<Rational> cost(width_, Rational(0));
    for (std::size_t j = 0; j < structural_; ++j) cost[j] = structural_cost[j];
    return optimize(cost, first_artificial_);
  }

  std::vector<Rational> structural_values() const {
    std::vector<Rational> y(structural_, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < structural_) y[basis_[i]] = cells_[i][width_];
    }
    return y;
  }

 private:
  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) v += cost[basis_[i]] * cells_[i][width_];
    return v;
  }

  // Maximizes cost . x over columns [0, allowed). Bland's rule throughout.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed && entering == allowed; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < basis_.size(); ++i) {
          if (sgn(cells_[i][j]) != 0) reduced -= cost[basis_[i]] * cells_[i][j];
        }
        if (sgn(reduced) > 0) entering = j;
      }
      if (entering == allowed) return true;

      std::size_t leaving = basis_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (sgn(cells_[i][entering]) <= 0) continue;
        Rational ratio = cells_[i][width_] / cells_[i][entering];
        if (leaving == basis_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == basis_.size()) return false;
      pivot(leaving, entering);
    }
  }

  bool is_basic(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = cells_[row][col];
    for (auto& v : cells_[row]) v /= p;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == row || sgn(cells_[i][col]) == 0) continue;
      const Rational factor = cells_[i][col];
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(cells_[row][j]) != 0) cells_[i][j] -= factor * cells_[row][j];
      }
    }
    basis_[row] = col;
  }

  // Pivots zero-level artificials out of the basis; drops redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (sgn(cells_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial_) {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

std::vector<Rational> recover(const StandardForm& sf, const std::vector<Rational>& y) {
  std::vector<Rational> x;
  x.reserve(sf.subs.size());
  for (const auto& sub : sf.subs) {
    Rational v = sub.offset;
    for (const auto& [col, s] : sub.columns) v += s * y[col];
    x.push_back(std::move(v));
  }
  return x;
}

}  // namespace

bool satisfies(const LinearProgram& program, const std::vector<Rational>& point) {
  if (point.size() != program.variables) return false;
  for (std::size_t j = 0; j < program.variables; ++j) {
    const Bound b = bound_of(program, j);
    if (b.lower && point[j] < *b.lower) return false;
    if (b.upper && point[j] > *b.upper) return false;
  }
  for (const auto& c : program.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < program.variables; ++j) lhs += c.coefficients[j] * point[j];
    switch (c.comparator) {
      case Comparator::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Comparator::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Comparator::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

Outcome solve(const LinearProgram& program) {
  check_dimensions(program);
  const StandardForm sf = standardize(program);
  Tableau tableau(sf);
  if (!tableau.phase_one()) return Infeasible{};
  if (!tableau.phase_two(sf.objective)) return Unbounded{};

  Optimal out;
  out.point = recover(sf, tableau.structural_values());
  if (!satisfies(program, out.point)) {
    throw std::logic_error("simplex produced a point violating the program");
  }
  out.value = 0;
  for (std::size_t j = 0; j < program.variables; ++j) out.value += program.objective[j] * out.point[j];
  return out;
}

std::optional<std::vector<Rational>> feasible_point(std::size_t variables, const std::vector<Constraint>& constraints,
                                                    const std::vector<Bound>& bounds) {
  LinearProgram program;
  program.variables = variables;
  program.objective.assign(variables, Rational(0));
  program.constraints = constraints;
  program.bounds = bounds;
  const Outcome outcome = solve(program);
  if (const auto* opt = std::get_if<Optimal>(&outcome)) return opt->point;
  return std::nullopt;
}

}  // namespace ambipref::lp

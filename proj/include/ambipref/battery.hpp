#pragma once

// Finite act batteries and a fast exact evaluator for model margins of
// integer combinations of battery acts.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ambipref/margins.hpp"

namespace ambipref {

namespace detail {
struct CompiledKind;
}

struct Battery {
  std::vector<Act> acts;
  std::vector<UtilityVector> utilities;  // utility_vector of each act
  std::string description;

  static Battery from_acts(const UtilityFunction& u, std::vector<Act> acts, std::string description);

  std::size_t size() const noexcept { return acts.size(); }
  /// Indices of constant acts, ascending.
  std::vector<std::size_t> constants() const;
};

/// Lattice battery. Coordinates run over {-radius, ..., radius} in steps of
/// radius/resolution per state and are measured in normalized utility units:
/// a coordinate v is realized as utility midpoint + v * half_range, mixing
/// the worst and best prizes. radius 1 therefore spans the whole utility
/// range and coordinate 0 is the reference constant act. Acts are ordered
/// lexicographically with the first state most significant.
///
/// Throws RadiusExceedsUtilityRange for radius > 1 and ParamsOutOfRange for
/// nonpositive radius or resolution, or a battery above `max_acts`.
Battery generate_act_grid(const Instance& inst, int resolution, const Rational& radius,
                          std::size_t max_acts = 200000);

/// Lattice coordinates of the grid, same order as generate_act_grid.
std::vector<UtilityVector> lattice_points(std::size_t num_states, int resolution, const Rational& radius);

/// Evaluates margins of sum_k coef_k * u(act_k) for one model over one
/// battery. Per-vertex expectations of every battery act are tabulated once;
/// sign queries then run in exact scaled integer arithmetic when the table
/// fits (falling back to Rational otherwise), so results are always exact.
class BatteryEvaluator {
 public:
  struct Term {
    std::int64_t coef;
    std::size_t act;
  };

  BatteryEvaluator(const BeliefCollection& collection, const Battery& battery, const ModelKind& kind);

  int sign(std::span<const Term> terms) const;
  int sign_pair(std::size_t f, std::size_t g) const;

  Rational margin(std::span<const Term> terms) const;
  Rational margin_pair(std::size_t f, std::size_t g) const;

  bool uses_integer_path() const noexcept { return integer_path_; }

 private:
  template <class Acc, class Cell>
  Acc scaled_margin(std::span<const Term> terms, const std::vector<std::vector<Cell>>& table) const;

  std::shared_ptr<const detail::CompiledKind> kind_;
  std::vector<std::size_t> set_offsets_;  // row ranges per set; last entry = total rows
  std::vector<std::vector<Rational>> exact_;   // [act][row]
  std::vector<std::vector<std::int64_t>> scaled_;  // [act][row] = exact * denominator
  bool integer_path_ = false;
};

}  // namespace ambipref

#include "ambipref/battery.hpp"

#include <cstdlib>

#include "compiled_kind.hpp"

namespace ambipref {

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

Battery Battery::from_acts(const UtilityFunction& u, std::vector<Act> acts, std::string description) {
  Battery b;
  b.utilities.reserve(acts.size());
  for (const auto& f : acts) b.utilities.push_back(utility_vector(u, f));
  b.acts = std::move(acts);
  b.description = std::move(description);
  return b;
}

std::vector<std::size_t> Battery::constants() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    if (utilities[i].is_constant()) out.push_back(i);
  }
  return out;
}

std::vector<UtilityVector> lattice_points(std::size_t num_states, int resolution, const Rational& radius) {
  const std::size_t per_axis = 2 * static_cast<std::size_t>(resolution) + 1;
  std::vector<Rational> axis;
  axis.reserve(per_axis);
  const Rational step = radius / resolution;
  for (std::size_t k = 0; k < per_axis; ++k) axis.push_back(-radius + step * static_cast<long>(k));

  std::size_t total = 1;
  for (std::size_t s = 0; s < num_states; ++s) total *= per_axis;
  std::vector<UtilityVector> out;
  out.reserve(total);
  std::vector<std::size_t> digits(num_states, 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Rational> coords(num_states);
    for (std::size_t s = 0; s < num_states; ++s) coords[s] = axis[digits[s]];
    out.emplace_back(std::move(coords));
    for (std::size_t s = num_states; s-- > 0;) {
      if (++digits[s] < per_axis) break;
      digits[s] = 0;
    }
  }
  return out;
}

Battery generate_act_grid(const Instance& inst, int resolution, const Rational& radius, std::size_t max_acts) {
  if (resolution < 1) throw Error(ErrorCode::ParamsOutOfRange, "battery resolution must be positive");
  if (sgn(radius) <= 0) throw Error(ErrorCode::ParamsOutOfRange, "battery radius must be positive");
  if (radius > 1) {
    throw Error(ErrorCode::RadiusExceedsUtilityRange,
                "battery radius " + to_string(radius) + " exceeds the normalized utility range [-1, 1]");
  }
  double count = 1;
  for (std::size_t s = 0; s < inst.states.size(); ++s) count *= 2.0 * resolution + 1;
  if (count > static_cast<double>(max_acts)) {
    throw Error(ErrorCode::ParamsOutOfRange, "battery would hold " + std::to_string(static_cast<long long>(count)) +
                                                 " acts (limit " + std::to_string(max_acts) + ")");
  }
  const Rational mid = inst.utility.midpoint();
  const Rational half = inst.utility.half_range();
  std::vector<Act> acts;
  for (const auto& point : lattice_points(inst.states.size(), resolution, radius)) {
    acts.push_back(act_with_utilities(inst.utility, half * point + mid));
  }
  return Battery::from_acts(inst.utility, std::move(acts),
                            "lattice resolution=" + std::to_string(resolution) + " radius=" + to_string(radius));
}

namespace {

constexpr std::int64_t kIntegerLimit = std::int64_t{1} << 53;

}  // namespace

BatteryEvaluator::BatteryEvaluator(const BeliefCollection& collection, const Battery& battery, const ModelKind& kind)
    : kind_(std::make_shared<detail::CompiledKind>(detail::compile(kind, collection))) {
  if (battery.size() == 0) throw Error(ErrorCode::EmptyBattery, "battery is empty");
  std::vector<const Prior*> rows;
  if (kind_->tag == detail::Tag::Seu) {
    rows.push_back(&*kind_->prior);
    set_offsets_ = {0, 1};
  } else {
    set_offsets_.push_back(0);
    for (const auto& set : collection.sets()) {
      for (const auto& p : set.vertices()) rows.push_back(&p);
      set_offsets_.push_back(rows.size());
    }
  }

  exact_.reserve(battery.size());
  mpz_class denominator = 1;
  for (const auto& phi : battery.utilities) {
    if (phi.size() != collection.num_states()) {
      throw Error(ErrorCode::DimensionMismatch, "battery act has the wrong number of states");
    }
    std::vector<Rational> row_values;
    row_values.reserve(rows.size());
    for (const Prior* p : rows) {
      row_values.push_back(expected_value(*p, phi));
      mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), row_values.back().get_den_mpz_t());
    }
    exact_.push_back(std::move(row_values));
  }

  const mpz_class limit(static_cast<double>(kIntegerLimit));
  integer_path_ = denominator < limit && kind_->alpha.get_den() < 1'000'000;
  if (!integer_path_) return;
  scaled_.reserve(exact_.size());
  for (const auto& row_values : exact_) {
    std::vector<std::int64_t> ints;
    ints.reserve(row_values.size());
    for (const auto& e : row_values) {
      const mpz_class n = e.get_num() * (denominator / e.get_den());
      if (abs(n) >= limit) {
        integer_path_ = false;
        scaled_.clear();
        return;
      }
      ints.push_back(n.get_si());
    }
    scaled_.push_back(std::move(ints));
  }
}

template <class Acc, class Cell>
Acc BatteryEvaluator::scaled_margin(std::span<const Term> terms, const std::vector<std::vector<Cell>>& table) const {
  const std::size_t num_sets = set_offsets_.size() - 1;
  std::vector<Acc> mins(num_sets);
  std::vector<Acc> maxs(num_sets);
  for (std::size_t i = 0; i < num_sets; ++i) {
    for (std::size_t r = set_offsets_[i]; r < set_offsets_[i + 1]; ++r) {
      Acc value = 0;
      for (const auto& term : terms) value += Acc(term.coef) * Acc(table[term.act][r]);
      if (r == set_offsets_[i] || value < mins[i]) mins[i] = value;
      if (r == set_offsets_[i] || value > maxs[i]) maxs[i] = value;
    }
  }
  const Acc seu = mins[0];
  if constexpr (std::is_same_v<Acc, Rational>) {
    return detail::combine_scaled<Acc, Acc>(*kind_, mins, maxs, seu, Acc(kind_->alpha.get_num()),
                                            Acc(kind_->alpha.get_den()));
  } else {
    return detail::combine_scaled<Acc, Acc>(*kind_, mins, maxs, seu, Acc(kind_->alpha.get_num().get_si()),
                                            Acc(kind_->alpha.get_den().get_si()));
  }
}

int BatteryEvaluator::sign(std::span<const Term> terms) const {
  if (integer_path_) {
    const Wide v = scaled_margin<Wide>(terms, scaled_);
    return (v > 0) - (v < 0);
  }
  return sgn(scaled_margin<Rational>(terms, exact_));
}

int BatteryEvaluator::sign_pair(std::size_t f, std::size_t g) const {
  const Term terms[] = {{1, f}, {-1, g}};
  return sign(terms);
}

Rational BatteryEvaluator::margin(std::span<const Term> terms) const {
  return scaled_margin<Rational>(terms, exact_) / kind_->scale();
}

Rational BatteryEvaluator::margin_pair(std::size_t f, std::size_t g) const {
  const Term terms[] = {{1, f}, {-1, g}};
  return margin(terms);
}

}  // namespace ambipref

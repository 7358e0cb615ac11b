#pragma once

// Decision-theoretic universe: states, prizes, lotteries, acts, utility and
// priors. Every type validates its invariants on construction and is
// immutable afterwards.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ambipref/error.hpp"
#include "ambipref/rational.hpp"

namespace ambipref {

class StateSpace {
 public:
  /// Throws EmptyStateSpace or DuplicateLabel.
  static StateSpace make(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

class PrizeSet {
 public:
  /// Throws TooFewPrizes (fewer than two) or DuplicateLabel.
  static PrizeSet make(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

/// Finite-support lottery over the prize set, indexed in prize order.
class Lottery {
 public:
  /// Throws NonSimplexLottery unless weights are nonnegative and sum to 1.
  static Lottery make(std::vector<Rational> weights);
  static Lottery degenerate(std::size_t num_prizes, std::size_t prize);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& weight(std::size_t prize) const { return weights_.at(prize); }
  std::span<const Rational> weights() const noexcept { return weights_; }

  friend bool operator==(const Lottery&, const Lottery&) = default;

 private:
  std::vector<Rational> weights_;
};

class UtilityFunction {
 public:
  /// Throws ConstantUtility when all values coincide, TooFewPrizes when < 2.
  static UtilityFunction make(std::vector<Rational> values);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& value(std::size_t prize) const { return values_.at(prize); }
  std::span<const Rational> values() const noexcept { return values_; }

  std::size_t worst_prize() const noexcept { return worst_; }
  std::size_t best_prize() const noexcept { return best_; }
  const Rational& lowest() const { return values_[worst_]; }
  const Rational& highest() const { return values_[best_]; }
  /// Midpoint of [lowest, highest]; utility of the reference constant act.
  Rational midpoint() const { return (lowest() + highest()) / 2; }
  Rational half_range() const { return (highest() - lowest()) / 2; }

 private:
  std::vector<Rational> values_;
  std::size_t worst_ = 0;
  std::size_t best_ = 0;
};

class Act {
 public:
  /// Throws DimensionMismatch if lotteries disagree on the prize count.
  static Act make(std::vector<Lottery> by_state);
  static Act constant(std::size_t num_states, const Lottery& lottery);

  std::size_t num_states() const noexcept { return by_state_.size(); }
  const Lottery& at(std::size_t state) const { return by_state_.at(state); }
  std::span<const Lottery> lotteries() const noexcept { return by_state_; }
  bool is_constant() const;

  friend bool operator==(const Act&, const Act&) = default;

 private:
  std::vector<Lottery> by_state_;
};

/// An act pushed through the utility function: one entry per state.
class UtilityVector {
 public:
  UtilityVector() = default;
  explicit UtilityVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  static UtilityVector constant(std::size_t n, const Rational& value);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_constant() const;
  Rational sup_norm() const;

  friend UtilityVector operator+(const UtilityVector& a, const UtilityVector& b);
  friend UtilityVector operator-(const UtilityVector& a, const UtilityVector& b);
  friend UtilityVector operator-(const UtilityVector& a);
  friend UtilityVector operator*(const Rational& scale, const UtilityVector& a);
  /// Adds c to every entry (translation along the diagonal).
  friend UtilityVector operator+(const UtilityVector& a, const Rational& c);
  friend UtilityVector operator-(const UtilityVector& a, const Rational& c);
  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;
  friend auto operator<=>(const UtilityVector& a, const UtilityVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Rational> entries_;
};

class Prior {
 public:
  /// Throws NonSimplexPrior unless entries are nonnegative and sum to 1.
  static Prior make(std::vector<Rational> probabilities);
  static Prior degenerate(std::size_t num_states, std::size_t state);

  std::size_t size() const noexcept { return probs_.size(); }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }
  std::span<const Rational> probabilities() const noexcept { return probs_; }

  friend bool operator==(const Prior&, const Prior&) = default;
  friend auto operator<=>(const Prior& a, const Prior& b) { return a.probs_ <=> b.probs_; }

 private:
  std::vector<Rational> probs_;
};

/// A credal polytope given by its vertex list; the set is their convex hull.
class BeliefSet {
 public:
  /// Throws EmptyBeliefSet, DuplicateVertex or DimensionMismatch.
  static BeliefSet make(std::string name, std::vector<Prior> vertices);

  const std::string& name() const noexcept { return name_; }
  std::size_t num_states() const noexcept { return vertices_.front().size(); }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Prior& vertex(std::size_t i) const { return vertices_.at(i); }
  std::span<const Prior> vertices() const noexcept { return vertices_; }

 private:
  std::string name_;
  std::vector<Prior> vertices_;
};

class BeliefCollection {
 public:
  /// Throws EmptyCollection, DimensionMismatch or DuplicateLabel (set names).
  static BeliefCollection make(std::vector<BeliefSet> sets);

  std::size_t size() const noexcept { return sets_.size(); }
  std::size_t num_states() const noexcept { return sets_.front().num_states(); }
  const BeliefSet& at(std::size_t i) const { return sets_.at(i); }
  std::span<const BeliefSet> sets() const noexcept { return sets_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t total_vertices() const;

 private:
  std::vector<BeliefSet> sets_;
};

struct NamedAct {
  std::string name;
  Act act;
};

/// A complete decision problem. Build through `Instance::make` (or the JSON
/// loader) so that every dimension is checked against states and prizes.
struct Instance {
  StateSpace states;
  PrizeSet prizes;
  UtilityFunction utility;
  BeliefCollection collection;
  std::vector<NamedAct> acts;

  static Instance make(StateSpace states, PrizeSet prizes, UtilityFunction utility,
                       BeliefCollection collection, std::vector<NamedAct> acts = {});

  const Act* find_act(std::string_view name) const;
  /// Throws UnknownAct.
  const Act& act(std::string_view name) const;
};

Rational utility_of_lottery(const UtilityFunction& u, const Lottery& x);

UtilityVector utility_vector(const UtilityFunction& u, const Act& f);

Rational expected_value(const Prior& p, const UtilityVector& phi);

Lottery mix_lotteries(const Rational& alpha, const Lottery& x, const Lottery& y);

/// Statewise mixture alpha*f + (1-alpha)*g. Throws AlphaOutOfRange.
Act mix_acts(const Rational& alpha, const Act& f, const Act& g);

/// f(s) is weakly better than g(s) in every state under the utility ranking.
bool statewise_dominates(const UtilityFunction& u, const Act& f, const Act& g);
bool statewise_dominates(const Instance& inst, const Act& f, const Act& g);
bool statewise_dominates(const UtilityVector& f, const UtilityVector& g);

/// Builds an act whose utility vector equals `target`, mixing the worst and
/// best prizes in each state. Throws RadiusExceedsUtilityRange if any entry
/// lies outside [lowest, highest].
Act act_with_utilities(const UtilityFunction& u, const UtilityVector& target);

}  // namespace ambipref

#pragma once

#include <string>
#include <vector>

#include "ambipref/margins.hpp"

namespace ambipref::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline UtilityVector uv(std::vector<const char*> entries) {
  std::vector<Rational> out;
  for (const char* e : entries) out.push_back(q(e));
  return UtilityVector(std::move(out));
}

inline Prior binary(const Rational& p) { return Prior::make({p, 1 - p}); }

// Two-state set whose first coordinates span [lo, hi].
inline BeliefSet interval(std::string name, const char* lo, const char* hi) {
  return BeliefSet::make(std::move(name), {binary(q(lo)), binary(q(hi))});
}

// P1 = hull{(1/5,4/5),(2/5,3/5)}, P2 = hull{(3/5,2/5),(4/5,1/5)}
inline BeliefCollection disjoint_pair() {
  return BeliefCollection::make({interval("P1", "1/5", "2/5"), interval("P2", "3/5", "4/5")});
}

inline BeliefCollection touching_pair() {
  return BeliefCollection::make({interval("P1", "1/5", "2/5"), interval("P2", "2/5", "3/5")});
}

inline BeliefCollection cutting_pair() {
  return BeliefCollection::make({interval("P1", "1/5", "1/2"), interval("P2", "2/5", "7/10")});
}

// Two prizes worth 0 and 1, two states, acts f = (best, worst) and g = (worst, best).
inline Instance two_state(BeliefCollection collection) {
  const Lottery worst = Lottery::degenerate(2, 0);
  const Lottery best = Lottery::degenerate(2, 1);
  std::vector<NamedAct> acts{{"f", Act::make({best, worst})}, {"g", Act::make({worst, best})}};
  return Instance::make(StateSpace::make({"s1", "s2"}), PrizeSet::make({"z0", "z1"}),
                        UtilityFunction::make({Rational(0), Rational(1)}), std::move(collection), std::move(acts));
}

}  // namespace ambipref::testing

#pragma once

// Max-of-min / min-of-max expectation margins and the preference models
// built from them. Every model judges f against g by the sign of a margin
// evaluated at phi = u(f) - u(g): f is weakly preferred iff margin >= 0.

#include <string>
#include <string_view>
#include <variant>

#include "ambipref/model.hpp"

namespace ambipref {

struct MarginProfile {
  Rational maxmin;  // max over sets of min over vertices
  Rational minmax;  // min over sets of max over vertices

  friend bool operator==(const MarginProfile&, const MarginProfile&) = default;
};

namespace models {
struct GeneralizedBewley {};
struct Disjunctive {};
struct Conjunctive {};
struct HalfMixture {};
struct AlphaMixture {
  Rational alpha;  // weight on maxmin, in [0, 1]
};
struct Bewley {
  std::string set_name;
};
struct Justifiable {
  std::string set_name;
};
struct Seu {
  Prior prior;
};
}  // namespace models

using ModelKind = std::variant<models::GeneralizedBewley, models::Disjunctive, models::Conjunctive,
                               models::HalfMixture, models::AlphaMixture, models::Bewley,
                               models::Justifiable, models::Seu>;

/// Parses "generalized-bewley" (alias "gb"), "disjunctive", "conjunctive",
/// "half-mixture" ("half"), "alpha:<q>", "bewley:<set>", "justifiable:<set>",
/// "seu:<p1>,<p2>,...". Throws UnknownModel / AlphaOutOfRange / NonSimplexPrior.
ModelKind parse_model(std::string_view text);
std::string to_string(const ModelKind& kind);

/// Throws AlphaOutOfRange, UnknownBeliefSetName or DimensionMismatch when
/// the kind does not fit the collection.
void check_model(const ModelKind& kind, const BeliefCollection& collection);

enum class Relation { StrictlyPreferred, StrictlyDispreferred, Indifferent, Incomparable };
std::string_view to_string(Relation r) noexcept;
Relation relation_from(bool forward, bool backward) noexcept;

Rational set_min(const BeliefSet& set, const UtilityVector& phi);
Rational set_max(const BeliefSet& set, const UtilityVector& phi);

MarginProfile margin_profile(const BeliefCollection& collection, const UtilityVector& phi);

Rational model_margin(const ModelKind& kind, const BeliefCollection& collection, const UtilityVector& phi);

bool weakly_prefers(const ModelKind& kind, const Instance& inst, const Act& f, const Act& g);
Relation classify(const ModelKind& kind, const Instance& inst, const Act& f, const Act& g);

/// Robust subrelation: strict positivity of the margin.
bool robust_weakly_prefers(const ModelKind& kind, const Instance& inst, const Act& f, const Act& g);

}  // namespace ambipref

#pragma once

// Internal: a ModelKind resolved against a collection, plus the one formula
// that turns per-set minima/maxima into a model margin. Shared by the exact
// Rational evaluator and the integer fast path so both judge identically.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>

#include "ambipref/margins.hpp"

namespace ambipref::detail {

enum class Tag { GeneralizedBewley, Disjunctive, Conjunctive, HalfMixture, AlphaMixture, Bewley, Justifiable, Seu };

struct CompiledKind {
  Tag tag = Tag::GeneralizedBewley;
  Rational alpha;              // AlphaMixture weight
  std::size_t set_index = 0;   // Bewley / Justifiable
  std::optional<Prior> prior;  // Seu

  /// Positive factor by which `combine_scaled` inflates the true margin.
  Rational scale() const {
    switch (tag) {
      case Tag::HalfMixture: return 2;
      case Tag::AlphaMixture: return Rational(alpha.get_den());
      default: return 1;
    }
  }
};

CompiledKind compile(const ModelKind& kind, const BeliefCollection& collection);

/// Margin times `kind.scale()`. `mins[i]` / `maxs[i]` are min / max of the
/// expectation over the vertices of set i; `seu` is the expectation under
/// the Seu prior (ignored for other kinds). Num is Rational or an integer.
template <class Num, class AlphaNum>
Num combine_scaled(const CompiledKind& kind, std::span<const Num> mins, std::span<const Num> maxs, const Num& seu,
                   const AlphaNum& alpha_num, const AlphaNum& alpha_den) {
  switch (kind.tag) {
    case Tag::Bewley: return mins[kind.set_index];
    case Tag::Justifiable: return maxs[kind.set_index];
    case Tag::Seu: return seu;
    default: break;
  }
  Num maxmin = *std::max_element(mins.begin(), mins.end());
  Num minmax = *std::min_element(maxs.begin(), maxs.end());
  switch (kind.tag) {
    case Tag::GeneralizedBewley: return maxmin;
    case Tag::Disjunctive: return std::max(maxmin, minmax);
    case Tag::Conjunctive: return std::min(maxmin, minmax);
    case Tag::HalfMixture: return Num(maxmin + minmax);
    case Tag::AlphaMixture: return Num(alpha_num * maxmin + (alpha_den - alpha_num) * minmax);
    default: return maxmin;
  }
}

}  // namespace ambipref::detail

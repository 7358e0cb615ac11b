#pragma once

// Cross-sections of the model cones on 2-planes through the diagonal.
// Directions are exact rational points on the unit circle, so every sign
// along the slice is decided exactly.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ambipref/margins.hpp"

namespace ambipref {

/// Plane spanned by the diagonal 1 and e2 = d - mean(d) 1.
/// phi(theta) = cos(theta) 1 + sin(theta) e2.
struct SlicePlane {
  UtilityVector direction;
  UtilityVector e1;
  UtilityVector e2;

  /// Throws DegenerateDirection when d is proportional to 1.
  static SlicePlane make(const UtilityVector& direction);
  UtilityVector at(const Rational& c, const Rational& s) const;
};

/// Exact rational point on the unit circle near angle 2 pi k / n. The
/// quadrant is exact; the residual angle goes through tan(theta / 2) rounded
/// to a multiple of 2^-16. Antipodal samples k and k + n/2 are exact
/// negatives, and sample k of n equals sample 2k of 2n.
struct CirclePoint {
  Rational c;
  Rational s;
};
CirclePoint circle_point(std::size_t k, std::size_t n);

struct SliceSample {
  std::size_t k = 0;
  Rational cos_value;
  Rational sin_value;
  Rational maxmin;
  Rational minmax;
  Rational half;
  std::optional<Rational> alpha;
};

enum class Cone { GeneralizedBewley, Dual, Conjunctive, Disjunctive, HalfMixture, AlphaMixture };
std::string_view to_string(Cone cone) noexcept;
/// Throws UnknownModel.
Cone parse_cone(std::string_view name);

/// Maximal circular runs of sample indices, start and length.
struct Arc {
  std::size_t start = 0;
  std::size_t length = 0;
};

struct SliceProfile {
  SlicePlane plane;
  std::size_t n = 0;
  std::optional<Rational> alpha;
  std::vector<SliceSample> samples;  // ordered by k

  /// Margin of the cone at sample k.
  Rational value(Cone cone, std::size_t k) const;
  /// Runs where the cone's margin is >= 0.
  std::vector<Arc> nonnegative_arcs(Cone cone) const;
};

/// n must be even and >= 8 (TooFewSamples / ParamsOutOfRange). Throws
/// DegenerateDirection, DimensionMismatch, AlphaOutOfRange.
SliceProfile slice_profile(const BeliefCollection& collection, const UtilityVector& direction, std::size_t n,
                           const std::optional<Rational>& alpha = std::nullopt);

struct SliceVerdict {
  Cone cone;
  bool passed = false;
  std::vector<Arc> arcs;  // the certified region (complement for Disjunctive)
  std::string reason;
};

/// GeneralizedBewley, Dual: the nonnegative samples form one arc.
/// Conjunctive, AlphaMixture: one arc of at most a half-turn (AlphaMixture
/// may legitimately fail). Disjunctive: the negative samples form one arc of
/// at most a half-turn. HalfMixture: one arc and
/// sign(H_k) = -sign(H_{k+n/2}) for every k.
SliceVerdict certify_slice_convexity(const SliceProfile& profile, Cone cone);

/// "csv": header theta,maxmin,minmax,half,alpha with decimal cells (theta in
/// radians, alpha empty when absent). "json": exact strings and decimals.
/// Throws UnknownFormat.
std::string export_slice(const SliceProfile& profile, std::string_view format);

}  // namespace ambipref

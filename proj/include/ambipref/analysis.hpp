#pragma once

// Parametric analysis of belief collections: pairwise intersection with
// separation certificates, cutting-hyperplane search, max/min commutativity,
// the two-state SEU collapse, and constructive witnesses for the
// completeness and constant-bound-transitivity violations they imply.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ambipref/margins.hpp"

namespace ambipref {

/// For every set, E_{plus}[normal] > offset > E_{minus}[normal].
struct CuttingHyperplane {
  UtilityVector normal;
  Rational offset;
  struct Straddle {
    std::size_t plus;
    std::size_t minus;
  };
  std::vector<Straddle> straddles;  // vertex indices, one entry per set
};

/// phi1 + phi2 = 0 and min-expectation of phi1 over the first set and of
/// phi2 over the second are both >= slack > 0.
struct SametCertificate {
  UtilityVector phi1;
  UtilityVector phi2;
  Rational slack;
};

struct CommonPrior {
  Prior prior;
  std::vector<Rational> first_weights;   // convex weights over the first set's vertices
  std::vector<Rational> second_weights;  // and over the second set's
};

struct Disjoint {
  SametCertificate certificate;
};

using Intersection = std::variant<CommonPrior, Disjoint>;

/// Throws DimensionMismatch.
Intersection polytopes_intersect(const BeliefSet& first, const BeliefSet& second);

/// Exact re-verification of either certificate form.
bool verify_intersection(const BeliefSet& first, const BeliefSet& second, const Intersection& result);

struct PairwiseResult {
  bool holds = true;
  /// Every unordered pair i < j, in lexicographic order.
  struct Entry {
    std::size_t first;
    std::size_t second;
    Intersection result;
  };
  std::vector<Entry> pairs;
  /// First disjoint pair, when any.
  std::optional<std::size_t> failing;
};

PairwiseResult pairwise_intersection_holds(const BeliefCollection& collection);

/// Decides existence of a cutting hyperplane exactly. Searches the offset
/// normalized to zero (E_p[phi - c1] = E_p[phi] - c), one strict-slack LP
/// per straddling vertex assignment, with depth-first pruning on partial
/// assignments. Returns the lexicographically smallest assignment's witness.
std::optional<CuttingHyperplane> find_cutting_hyperplane(const BeliefCollection& collection);

bool verify_cutting_hyperplane(const BeliefCollection& collection, const CuttingHyperplane& cut);

struct CommutativityVerdict {
  bool commutes = true;
  std::size_t checked = 0;
  std::optional<UtilityVector> counterexample;
  std::optional<MarginProfile> counterexample_profile;
};

CommutativityVerdict check_commutativity(const BeliefCollection& collection, const std::vector<UtilityVector>& battery);

/// |S| = 2 only (throws WrongDimension otherwise). Returns (a, 1 - a) when
/// max over sets of the least first coordinate equals min over sets of the
/// greatest one.
std::optional<Prior> seu_collapse_binary(const BeliefCollection& collection);

struct IncompletenessWitness {
  Act act;        // u(act) = midpoint + scale * (normal - offset)
  Act reference;  // constant act at the utility midpoint
  UtilityVector act_utility;
  Rational reference_utility;
  MarginProfile forward;   // profile of u(act) - u(reference)
  MarginProfile backward;  // profile of u(reference) - u(act)
};

/// Completeness violation for the generalized Bewley model built from a
/// cutting hyperplane: neither act is weakly preferred to the other.
IncompletenessWitness build_incompleteness_witness(const Instance& inst, const CuttingHyperplane& cut);

struct CbtWitness {
  Act low;   // constant, utility midpoint (the reference x0)
  Act act;   // u(act) = midpoint + scale * phi1
  Act high;  // constant, utility midpoint + scale * slack / 2 (x_eps)
  Rational low_utility;
  Rational high_utility;
  UtilityVector act_utility;
  Rational low_over_act;   // generalized Bewley margin of u(low) - u(act)
  Rational act_over_high;  // margin of u(act) - u(high)
  Rational low_over_high;  // margin of u(low) - u(high), negative
};

/// Constant-bound transitivity violation x0 >= f >= x_eps with
/// u(x_eps) > u(x0), built from the certificate of a disjoint pair.
CbtWitness build_cbt_witness(const Instance& inst, const SametCertificate& cert);

struct AnalysisReport {
  PairwiseResult pairwise;
  std::optional<CuttingHyperplane> cutting;
  bool complete_param = false;  // no cutting hyperplane
  bool cbt_param = false;       // every pair intersects
  CommutativityVerdict commutes;
  std::optional<Prior> seu_collapse;  // two-state instances only
  std::optional<IncompletenessWitness> incompleteness_witness;
  std::optional<CbtWitness> cbt_witness;
};

/// Limits for the exponential cutting-hyperplane search.
struct AnalysisLimits {
  std::size_t max_states = 4;
  std::size_t max_sets = 4;
  std::size_t max_vertices = 6;
};

/// Full analysis. The commutativity check runs over all differences of the
/// default lattice battery (resolution 2, radius 1). Throws InstanceTooLarge
/// beyond `limits`.
AnalysisReport analyze(const Instance& inst, const AnalysisLimits& limits = {});

/// Unique differences u(f) - u(g) over battery utility vectors, sorted.
std::vector<UtilityVector> difference_vectors(const std::vector<UtilityVector>& utilities);

}  // namespace ambipref

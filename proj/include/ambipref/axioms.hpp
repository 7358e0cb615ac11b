#pragma once

// Finite-battery audits of the rationality axioms. Every violation comes
// with battery indices and the margins that decided it, and can be replayed
// through the plain Rational margin path.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ambipref/battery.hpp"
#include "ambipref/margins.hpp"

namespace ambipref {

enum class AxiomKind {
  NonTriviality,
  Reflexivity,
  UnambiguousCompleteness,
  UnambiguousTransitivity,
  Monotonicity,
  Independence,
  Completeness,
  Transitivity,
  ConstantBoundTransitivity,
  FavorableMixing,
  NegativeCompleteness,
  NegativeConstantBoundTransitivity,
};

const std::vector<AxiomKind>& all_axioms();
std::string_view to_string(AxiomKind axiom) noexcept;
/// Kebab-case names ("constant-bound-transitivity") plus the short forms
/// cbt and ncbt. Throws UnknownAxiom.
AxiomKind parse_axiom(std::string_view name);
/// Axioms quantifying over constant acts.
bool needs_constants(AxiomKind axiom) noexcept;

struct AuditOptions {
  /// alpha grid for Independence, alpha and lambda grid for FavorableMixing.
  std::vector<Rational> weights{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::size_t max_witnesses = 32;  // 0 keeps every witness
  std::size_t spot_checks = 256;   // mixed-act triples for Independence
};

struct Judgment {
  std::string claim;  // e.g. "x >= f"; margin of the left minus the right side
  Rational margin;
};

struct Witness {
  /// Battery indices. Roles per axiom:
  ///   Reflexivity [f]; pair axioms [f, g]; UnambiguousTransitivity,
  ///   Transitivity, Independence, FavorableMixing [f, g, h];
  ///   constant-bound axioms [x, f, y]; NonTriviality [].
  std::vector<std::size_t> acts;
  std::optional<Rational> alpha;
  std::optional<Rational> lambda;
  int clause = 0;  // UnambiguousTransitivity: 1 or 2
  std::vector<Judgment> judgments;
  std::string note;
};

struct AuditReport {
  AxiomKind axiom;
  ModelKind model;
  std::string battery;
  std::size_t battery_size = 0;
  bool passed = true;
  std::size_t checked = 0;     // tuples examined
  std::size_t violations = 0;  // all violating tuples, even beyond the witness cap
  std::vector<Witness> witnesses;  // lexicographic by battery index
  std::size_t boundary_flags = 0;  // consulted judgments between distinct acts with margin exactly 0
};

/// Throws BatteryMissingConstants, EmptyBattery, and the check_model errors.
AuditReport audit(AxiomKind axiom, const ModelKind& kind, const Instance& inst, const Battery& battery,
                  const AuditOptions& options = {});

/// Every axiom; those needing constants are skipped when the battery has none.
std::vector<AuditReport> audit_suite(const ModelKind& kind, const Instance& inst, const Battery& battery,
                                     const AuditOptions& options = {});

/// Recomputes the witness from the acts themselves (mixtures via mix_acts)
/// and checks both the violating sign pattern and the recorded margins.
bool replay(const AuditReport& report, const Instance& inst, const Battery& battery, const Witness& witness);

}  // namespace ambipref

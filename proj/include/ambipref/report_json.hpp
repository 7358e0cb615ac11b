#pragma once

// JSON renderings of audit, analysis and verification reports. Rationals are
// exact "num/den" strings throughout.

#include <string_view>
#include <vector>

#include <json.hpp>

#include "ambipref/analysis.hpp"
#include "ambipref/axioms.hpp"
#include "ambipref/verify.hpp"

namespace ambipref {

nlohmann::json to_json(const MarginProfile& profile);
/// Witness acts are rendered as battery indices plus their utility vectors.
nlohmann::json to_json(const AuditReport& report, const Battery& battery);
nlohmann::json to_json(const AnalysisReport& report, const Instance& inst);
nlohmann::json to_json(const VerificationReport& report);

/// Relation, margins in both directions and the max-min / min-max profile of
/// two named acts. Throws UnknownAct and the check_model errors.
nlohmann::json evaluate_pair(const Instance& inst, const ModelKind& kind, std::string_view left,
                             std::string_view right);

/// {"model": ..., "reports": [...]} for the named axioms, or every applicable
/// axiom when `axioms` is empty.
nlohmann::json audit_document(const Instance& inst, const ModelKind& kind, const std::vector<AxiomKind>& axioms,
                              const Battery& battery, const AuditOptions& options = {});

}  // namespace ambipref

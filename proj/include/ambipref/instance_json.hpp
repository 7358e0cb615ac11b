#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "ambipref/model.hpp"

namespace ambipref {

/// Validates an untyped instance document. Collects every violation it can
/// find and throws a single ValidationError listing all of them.
///
/// Format (rationals as "num/den" strings or integers):
///   { "states": [...], "prizes": [...], "utility": {prize: r},
///     "belief_collection": [ {"name": n, "vertices": [[r, ...], ...]} ],
///     "acts": { name: { state: { prize: r } } } }
/// Vertex arrays follow the declared state order; lottery maps may omit
/// zero-weight prizes. "acts" is optional.
Instance validate_instance(const nlohmann::json& raw);

Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

nlohmann::json to_json(const Instance& inst);

/// Reads a rational from a JSON string ("num/den") or integer.
Rational rational_from_json(const nlohmann::json& value);
nlohmann::json rational_to_json(const Rational& value);
nlohmann::json to_json(const UtilityVector& phi);
nlohmann::json to_json(const Prior& p);

}  // namespace ambipref

#include "ambipref/margins.hpp"

#include <vector>

#include "compiled_kind.hpp"

namespace ambipref {

namespace detail {

CompiledKind compile(const ModelKind& kind, const BeliefCollection& collection) {
  CompiledKind out;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, models::GeneralizedBewley>) {
          out.tag = Tag::GeneralizedBewley;
        } else if constexpr (std::is_same_v<K, models::Disjunctive>) {
          out.tag = Tag::Disjunctive;
        } else if constexpr (std::is_same_v<K, models::Conjunctive>) {
          out.tag = Tag::Conjunctive;
        } else if constexpr (std::is_same_v<K, models::HalfMixture>) {
          out.tag = Tag::HalfMixture;
        } else if constexpr (std::is_same_v<K, models::AlphaMixture>) {
          if (sgn(k.alpha) < 0 || k.alpha > 1) {
            throw Error(ErrorCode::AlphaOutOfRange, "alpha " + to_string(k.alpha) + " outside [0, 1]");
          }
          out.tag = Tag::AlphaMixture;
          out.alpha = k.alpha;
        } else if constexpr (std::is_same_v<K, models::Bewley> || std::is_same_v<K, models::Justifiable>) {
          const auto idx = collection.index_of(k.set_name);
          if (!idx) {
            throw Error(ErrorCode::UnknownBeliefSetName, "no belief set named '" + k.set_name + "'");
          }
          out.tag = std::is_same_v<K, models::Bewley> ? Tag::Bewley : Tag::Justifiable;
          out.set_index = *idx;
        } else {
          if (k.prior.size() != collection.num_states()) {
            throw Error(ErrorCode::DimensionMismatch, "SEU prior has the wrong number of states");
          }
          out.tag = Tag::Seu;
          out.prior = k.prior;
        }
      },
      kind);
  return out;
}

}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

ModelKind parse_model(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : trim(text.substr(colon + 1));
  const bool has_arg = colon != std::string_view::npos;

  if (!has_arg) {
    if (head == "generalized-bewley" || head == "gb") return models::GeneralizedBewley{};
    if (head == "disjunctive") return models::Disjunctive{};
    if (head == "conjunctive") return models::Conjunctive{};
    if (head == "half-mixture" || head == "half") return models::HalfMixture{};
  } else {
    if (head == "alpha" || head == "alpha-mixture") {
      const Rational alpha = parse_rational(arg);
      if (sgn(alpha) < 0 || alpha > 1) {
        throw Error(ErrorCode::AlphaOutOfRange, "alpha " + to_string(alpha) + " outside [0, 1]");
      }
      return models::AlphaMixture{alpha};
    }
    if (head == "bewley" && !arg.empty()) return models::Bewley{std::string(arg)};
    if (head == "justifiable" && !arg.empty()) return models::Justifiable{std::string(arg)};
    if (head == "seu") {
      std::vector<Rational> p;
      std::string_view rest = arg;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        p.push_back(parse_rational(trim(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      return models::Seu{Prior::make(std::move(p))};
    }
  }
  throw Error(ErrorCode::UnknownModel, "unknown model '" + std::string(text) + "'");
}

std::string to_string(const ModelKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, models::GeneralizedBewley>) return "generalized-bewley";
        if constexpr (std::is_same_v<K, models::Disjunctive>) return "disjunctive";
        if constexpr (std::is_same_v<K, models::Conjunctive>) return "conjunctive";
        if constexpr (std::is_same_v<K, models::HalfMixture>) return "half-mixture";
        if constexpr (std::is_same_v<K, models::AlphaMixture>) return "alpha:" + to_string(k.alpha);
        if constexpr (std::is_same_v<K, models::Bewley>) return "bewley:" + k.set_name;
        if constexpr (std::is_same_v<K, models::Justifiable>) return "justifiable:" + k.set_name;
        if constexpr (std::is_same_v<K, models::Seu>) {
          std::string out = "seu:";
          for (std::size_t s = 0; s < k.prior.size(); ++s) {
            if (s) out += ",";
            out += to_string(k.prior[s]);
          }
          return out;
        }
      },
      kind);
}

void check_model(const ModelKind& kind, const BeliefCollection& collection) {
  (void)detail::compile(kind, collection);
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::StrictlyPreferred: return "StrictlyPreferred";
    case Relation::StrictlyDispreferred: return "StrictlyDispreferred";
    case Relation::Indifferent: return "Indifferent";
    case Relation::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

Relation relation_from(bool forward, bool backward) noexcept {
  if (forward && backward) return Relation::Indifferent;
  if (forward) return Relation::StrictlyPreferred;
  if (backward) return Relation::StrictlyDispreferred;
  return Relation::Incomparable;
}

// A linear functional on a polytope attains its extrema at vertices.
Rational set_min(const BeliefSet& set, const UtilityVector& phi) {
  Rational best = expected_value(set.vertex(0), phi);
  for (std::size_t i = 1; i < set.size(); ++i) {
    Rational e = expected_value(set.vertex(i), phi);
    if (e < best) best = std::move(e);
  }
  return best;
}

Rational set_max(const BeliefSet& set, const UtilityVector& phi) {
  Rational best = expected_value(set.vertex(0), phi);
  for (std::size_t i = 1; i < set.size(); ++i) {
    Rational e = expected_value(set.vertex(i), phi);
    if (e > best) best = std::move(e);
  }
  return best;
}

MarginProfile margin_profile(const BeliefCollection& collection, const UtilityVector& phi) {
  MarginProfile out{set_min(collection.at(0), phi), set_max(collection.at(0), phi)};
  for (std::size_t i = 1; i < collection.size(); ++i) {
    Rational lo = set_min(collection.at(i), phi);
    Rational hi = set_max(collection.at(i), phi);
    if (lo > out.maxmin) out.maxmin = std::move(lo);
    if (hi < out.minmax) out.minmax = std::move(hi);
  }
  return out;
}

Rational model_margin(const ModelKind& kind, const BeliefCollection& collection, const UtilityVector& phi) {
  const detail::CompiledKind compiled = detail::compile(kind, collection);
  if (compiled.tag == detail::Tag::Seu) return expected_value(*compiled.prior, phi);

  std::vector<Rational> mins;
  std::vector<Rational> maxs;
  mins.reserve(collection.size());
  maxs.reserve(collection.size());
  for (const auto& set : collection.sets()) {
    mins.push_back(set_min(set, phi));
    maxs.push_back(set_max(set, phi));
  }
  const Rational scaled = detail::combine_scaled<Rational, Rational>(
      compiled, mins, maxs, Rational(0), Rational(compiled.alpha.get_num()), Rational(compiled.alpha.get_den()));
  return scaled / compiled.scale();
}

namespace {

UtilityVector difference(const Instance& inst, const Act& f, const Act& g) {
  return utility_vector(inst.utility, f) - utility_vector(inst.utility, g);
}

}  // namespace

bool weakly_prefers(const ModelKind& kind, const Instance& inst, const Act& f, const Act& g) {
  return sgn(model_margin(kind, inst.collection, difference(inst, f, g))) >= 0;
}

Relation classify(const ModelKind& kind, const Instance& inst, const Act& f, const Act& g) {
  return relation_from(weakly_prefers(kind, inst, f, g), weakly_prefers(kind, inst, g, f));
}

bool robust_weakly_prefers(const ModelKind& kind, const Instance& inst, const Act& f, const Act& g) {
  return sgn(model_margin(kind, inst.collection, difference(inst, f, g))) > 0;
}

}  // namespace ambipref

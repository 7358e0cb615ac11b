#include "ambipref/slices.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ambipref/instance_json.hpp"

namespace ambipref {

namespace {

constexpr long kTanDenominator = 1L << 16;

CirclePoint rotate_quarter(CirclePoint p, std::size_t turns) {
  for (std::size_t i = 0; i < turns % 4; ++i) p = {-p.s, p.c};
  return p;
}

int sign_at(const SliceProfile& profile, Cone cone, std::size_t k) { return sgn(profile.value(cone, k)); }

std::vector<Arc> runs(const std::vector<bool>& member) {
  const std::size_t n = member.size();
  std::vector<Arc> out;
  std::size_t count = 0;
  for (bool m : member) count += m;
  if (count == 0) return out;
  if (count == n) return {{0, n}};
  for (std::size_t k = 0; k < n; ++k) {
    if (!member[k] || member[(k + n - 1) % n]) continue;
    Arc arc{k, 0};
    while (member[(k + arc.length) % n]) ++arc.length;
    out.push_back(arc);
  }
  return out;
}

// Shortest text that reads back to the same double.
std::string decimal(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

SlicePlane SlicePlane::make(const UtilityVector& direction) {
  const std::size_t n = direction.size();
  if (n == 0) throw Error(ErrorCode::DegenerateDirection, "empty slice direction");
  Rational mean = 0;
  for (const auto& x : direction.entries()) mean += x;
  mean /= static_cast<long>(n);
  SlicePlane plane{direction, UtilityVector::constant(n, 1), direction - mean};
  if (sgn(plane.e2.sup_norm()) == 0) {
    throw Error(ErrorCode::DegenerateDirection, "slice direction is parallel to the diagonal");
  }
  return plane;
}

UtilityVector SlicePlane::at(const Rational& c, const Rational& s) const { return c * e1 + s * e2; }

CirclePoint circle_point(std::size_t k, std::size_t n) {
  const std::size_t quadrant = (4 * k) / n;
  const std::size_t residual = (4 * k) % n;  // residual angle = (pi/2) * residual / n
  const double angle = (std::numbers::pi / 2) * (static_cast<double>(residual) / static_cast<double>(n));
  const Rational t = ratio(static_cast<long>(std::llround(std::tan(angle / 2) * kTanDenominator)), kTanDenominator);
  const Rational t2 = t * t;
  CirclePoint p{(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
  return rotate_quarter(p, quadrant);
}

std::string_view to_string(Cone cone) noexcept {
  switch (cone) {
    case Cone::GeneralizedBewley: return "generalized-bewley";
    case Cone::Dual: return "dual";
    case Cone::Conjunctive: return "conjunctive";
    case Cone::Disjunctive: return "disjunctive";
    case Cone::HalfMixture: return "half-mixture";
    case Cone::AlphaMixture: return "alpha-mixture";
  }
  return "unknown";
}

Cone parse_cone(std::string_view name) {
  for (Cone c : {Cone::GeneralizedBewley, Cone::Dual, Cone::Conjunctive, Cone::Disjunctive, Cone::HalfMixture,
                 Cone::AlphaMixture}) {
    if (to_string(c) == name) return c;
  }
  if (name == "gb") return Cone::GeneralizedBewley;
  if (name == "half") return Cone::HalfMixture;
  if (name == "alpha") return Cone::AlphaMixture;
  throw Error(ErrorCode::UnknownModel, "unknown cone '" + std::string(name) + "'");
}

Rational SliceProfile::value(Cone cone, std::size_t k) const {
  const SliceSample& s = samples.at(k);
  switch (cone) {
    case Cone::GeneralizedBewley: return s.maxmin;
    case Cone::Dual: return s.minmax;
    case Cone::Conjunctive: return min_of(s.maxmin, s.minmax);
    case Cone::Disjunctive: return max_of(s.maxmin, s.minmax);
    case Cone::HalfMixture: return s.half;
    case Cone::AlphaMixture:
      if (!s.alpha) throw Error(ErrorCode::AlphaOutOfRange, "profile was computed without an alpha weight");
      return *s.alpha;
  }
  return s.maxmin;
}

std::vector<Arc> SliceProfile::nonnegative_arcs(Cone cone) const {
  std::vector<bool> member(n);
  for (std::size_t k = 0; k < n; ++k) member[k] = sign_at(*this, cone, k) >= 0;
  return runs(member);
}

SliceProfile slice_profile(const BeliefCollection& collection, const UtilityVector& direction, std::size_t n,
                           const std::optional<Rational>& alpha) {
  if (n < 8) throw Error(ErrorCode::TooFewSamples, "slice profiles need at least 8 samples");
  if (n % 2 != 0) throw Error(ErrorCode::ParamsOutOfRange, "slice sample count must be even");
  if (direction.size() != collection.num_states()) {
    throw Error(ErrorCode::DimensionMismatch, "slice direction has the wrong number of states");
  }
  if (alpha && (sgn(*alpha) < 0 || *alpha > 1)) throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 1]");

  SliceProfile profile{SlicePlane::make(direction), n, alpha, {}};
  profile.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const CirclePoint p = circle_point(k, n);
    const MarginProfile m = margin_profile(collection, profile.plane.at(p.c, p.s));
    SliceSample s{k, p.c, p.s, m.maxmin, m.minmax, (m.maxmin + m.minmax) / 2, std::nullopt};
    if (alpha) s.alpha = *alpha * m.maxmin + (1 - *alpha) * m.minmax;
    profile.samples.push_back(std::move(s));
  }
  return profile;
}

SliceVerdict certify_slice_convexity(const SliceProfile& profile, Cone cone) {
  const std::size_t n = profile.n;
  SliceVerdict v{cone, false, {}, {}};
  const bool complement = cone == Cone::Disjunctive;
  std::vector<bool> member(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int sg = sign_at(profile, cone, k);
    member[k] = complement ? sg < 0 : sg >= 0;
  }
  v.arcs = runs(member);
  if (v.arcs.size() != 1) {
    v.reason = std::to_string(v.arcs.size()) + (complement ? " negative arcs" : " nonnegative arcs");
    return v;
  }
  const bool bounded = cone != Cone::GeneralizedBewley && cone != Cone::Dual;
  if (bounded && v.arcs.front().length > n / 2 + 1) {
    v.reason = "arc spans more than a half-turn";
    return v;
  }
  if (cone == Cone::HalfMixture) {
    for (std::size_t k = 0; k < n / 2; ++k) {
      if (sign_at(profile, cone, k) != -sign_at(profile, cone, k + n / 2)) {
        v.reason = "antipodal signs disagree at sample " + std::to_string(k);
        return v;
      }
    }
  }
  v.passed = true;
  return v;
}

std::string export_slice(const SliceProfile& profile, std::string_view format) {
  const double turn = 2 * std::numbers::pi / static_cast<double>(profile.n);
  if (format == "csv") {
    std::ostringstream out;
    out << "theta,maxmin,minmax,half,alpha\n";
    for (const auto& s : profile.samples) {
      out << decimal(turn * static_cast<double>(s.k)) << ',' << decimal(to_double(s.maxmin)) << ','
          << decimal(to_double(s.minmax)) << ',' << decimal(to_double(s.half)) << ',';
      if (s.alpha) out << decimal(to_double(*s.alpha));
      out << '\n';
    }
    return out.str();
  }
  if (format == "json") {
    auto both = [](const Rational& r) { return nlohmann::json{{"exact", to_string(r)}, {"decimal", to_double(r)}}; };
    nlohmann::json doc;
    doc["n"] = profile.n;
    doc["direction"] = to_json(profile.plane.direction);
    doc["e2"] = to_json(profile.plane.e2);
    doc["alpha"] = profile.alpha ? nlohmann::json(to_string(*profile.alpha)) : nlohmann::json(nullptr);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : profile.samples) {
      nlohmann::json row;
      row["k"] = s.k;
      row["theta"] = {{"turns", to_string(ratio(static_cast<long>(s.k), static_cast<long>(profile.n)))},
                      {"radians", turn * static_cast<double>(s.k)}};
      row["point"] = {to_string(s.cos_value), to_string(s.sin_value)};
      row["maxmin"] = both(s.maxmin);
      row["minmax"] = both(s.minmax);
      row["half"] = both(s.half);
      row["alpha"] = s.alpha ? both(*s.alpha) : nlohmann::json(nullptr);
      rows.push_back(std::move(row));
    }
    doc["samples"] = std::move(rows);
    nlohmann::json arcs;
    std::vector<Cone> cones{Cone::GeneralizedBewley, Cone::Dual, Cone::Conjunctive, Cone::Disjunctive,
                            Cone::HalfMixture};
    if (profile.alpha) cones.push_back(Cone::AlphaMixture);
    for (Cone c : cones) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& a : profile.nonnegative_arcs(c)) list.push_back({{"start", a.start}, {"length", a.length}});
      arcs[std::string(to_string(c))] = std::move(list);
    }
    doc["nonnegative_arcs"] = std::move(arcs);
    return doc.dump(2) + "\n";
  }
  throw Error(ErrorCode::UnknownFormat, "unknown slice format '" + std::string(format) + "'");
}

}  // namespace ambipref

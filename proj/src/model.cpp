#include "ambipref/model.hpp"

#include <algorithm>
#include <set>

namespace ambipref {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::EmptyStateSpace: return "EmptyStateSpace";
    case ErrorCode::TooFewPrizes: return "TooFewPrizes";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NonSimplexPrior: return "NonSimplexPrior";
    case ErrorCode::NonSimplexLottery: return "NonSimplexLottery";
    case ErrorCode::ConstantUtility: return "ConstantUtility";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::EmptyBeliefSet: return "EmptyBeliefSet";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::UnknownBeliefSetName: return "UnknownBeliefSetName";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::UnknownAct: return "UnknownAct";
    case ErrorCode::UnknownAxiom: return "UnknownAxiom";
    case ErrorCode::RadiusExceedsUtilityRange: return "RadiusExceedsUtilityRange";
    case ErrorCode::BatteryMissingConstants: return "BatteryMissingConstants";
    case ErrorCode::EmptyBattery: return "EmptyBattery";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Issue>& issues) {
  std::string out = std::to_string(issues.size()) + " validation issue(s)";
  for (const auto& issue : issues) {
    out += "\n  ";
    out += issue.path.empty() ? "/" : issue.path;
    out += ": ";
    out += to_string(issue.code);
    out += ": ";
    out += issue.message;
  }
  return out;
}

void check_unique(const std::vector<std::string>& labels, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate " + std::string(what) + " label '" + label + "'");
    }
  }
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels, std::string_view label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

// Nonnegative entries summing to exactly one.
bool on_simplex(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) {
    if (sgn(v) < 0) return false;
    total += v;
  }
  return total == 1;
}

std::string render(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(issues.empty() ? ErrorCode::MalformedDocument : issues.front().code, summarize(issues)),
      issues_(std::move(issues)) {}

StateSpace StateSpace::make(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorCode::EmptyStateSpace, "state space must be nonempty");
  check_unique(labels, "state");
  StateSpace s;
  s.labels_ = std::move(labels);
  return s;
}

std::optional<std::size_t> StateSpace::index_of(std::string_view label) const {
  return find_label(labels_, label);
}

PrizeSet PrizeSet::make(std::vector<std::string> labels) {
  if (labels.size() < 2) throw Error(ErrorCode::TooFewPrizes, "at least two prizes are required");
  check_unique(labels, "prize");
  PrizeSet p;
  p.labels_ = std::move(labels);
  return p;
}

std::optional<std::size_t> PrizeSet::index_of(std::string_view label) const {
  return find_label(labels_, label);
}

Lottery Lottery::make(std::vector<Rational> weights) {
  if (weights.empty() || !on_simplex(weights)) {
    throw Error(ErrorCode::NonSimplexLottery,
                "lottery weights " + render(weights) + " must be nonnegative and sum to 1");
  }
  Lottery x;
  x.weights_ = std::move(weights);
  return x;
}

Lottery Lottery::degenerate(std::size_t num_prizes, std::size_t prize) {
  std::vector<Rational> w(num_prizes, Rational(0));
  w.at(prize) = 1;
  return make(std::move(w));
}

UtilityFunction UtilityFunction::make(std::vector<Rational> values) {
  if (values.size() < 2) throw Error(ErrorCode::TooFewPrizes, "utility needs at least two prizes");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) {
    throw Error(ErrorCode::ConstantUtility, "utility must be nonconstant, got " + render(values));
  }
  UtilityFunction u;
  u.worst_ = static_cast<std::size_t>(lo - values.begin());
  u.best_ = static_cast<std::size_t>(hi - values.begin());
  u.values_ = std::move(values);
  return u;
}

Act Act::make(std::vector<Lottery> by_state) {
  if (by_state.empty()) throw Error(ErrorCode::DimensionMismatch, "act must assign every state");
  for (const auto& x : by_state) {
    if (x.size() != by_state.front().size()) {
      throw Error(ErrorCode::DimensionMismatch, "act lotteries disagree on the prize count");
    }
  }
  Act f;
  f.by_state_ = std::move(by_state);
  return f;
}

Act Act::constant(std::size_t num_states, const Lottery& lottery) {
  return make(std::vector<Lottery>(num_states, lottery));
}

bool Act::is_constant() const {
  return std::all_of(by_state_.begin(), by_state_.end(),
                     [&](const Lottery& x) { return x == by_state_.front(); });
}

UtilityVector UtilityVector::constant(std::size_t n, const Rational& value) {
  return UtilityVector(std::vector<Rational>(n, value));
}

bool UtilityVector::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Rational& v) { return v == entries_.front(); });
}

Rational UtilityVector::sup_norm() const {
  Rational best = 0;
  for (const auto& v : entries_) {
    const Rational a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

namespace {

void require_same_size(const UtilityVector& a, const UtilityVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "utility vectors of different dimension");
  }
}

}  // namespace

UtilityVector operator+(const UtilityVector& a, const UtilityVector& b) {
  require_same_size(a, b);
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return UtilityVector(std::move(out));
}

UtilityVector operator-(const UtilityVector& a, const UtilityVector& b) {
  require_same_size(a, b);
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return UtilityVector(std::move(out));
}

UtilityVector operator-(const UtilityVector& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return UtilityVector(std::move(out));
}

UtilityVector operator*(const Rational& scale, const UtilityVector& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = scale * a[i];
  return UtilityVector(std::move(out));
}

UtilityVector operator+(const UtilityVector& a, const Rational& c) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + c;
  return UtilityVector(std::move(out));
}

UtilityVector operator-(const UtilityVector& a, const Rational& c) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - c;
  return UtilityVector(std::move(out));
}

Prior Prior::make(std::vector<Rational> probabilities) {
  if (probabilities.empty() || !on_simplex(probabilities)) {
    throw Error(ErrorCode::NonSimplexPrior,
                "prior " + render(probabilities) + " must be nonnegative and sum to 1");
  }
  Prior p;
  p.probs_ = std::move(probabilities);
  return p;
}

Prior Prior::degenerate(std::size_t num_states, std::size_t state) {
  std::vector<Rational> p(num_states, Rational(0));
  p.at(state) = 1;
  return make(std::move(p));
}

BeliefSet BeliefSet::make(std::string name, std::vector<Prior> vertices) {
  if (vertices.empty()) {
    throw Error(ErrorCode::EmptyBeliefSet, "belief set '" + name + "' has no vertices");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() != vertices.front().size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "belief set '" + name + "' mixes priors of different dimension");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j]) {
        throw Error(ErrorCode::DuplicateVertex,
                    "belief set '" + name + "' repeats vertex " + render(vertices[i].probabilities()));
      }
    }
  }
  BeliefSet set;
  set.name_ = std::move(name);
  set.vertices_ = std::move(vertices);
  return set;
}

BeliefCollection BeliefCollection::make(std::vector<BeliefSet> sets) {
  if (sets.empty()) throw Error(ErrorCode::EmptyCollection, "belief collection must be nonempty");
  std::vector<std::string> names;
  for (const auto& set : sets) {
    if (set.num_states() != sets.front().num_states()) {
      throw Error(ErrorCode::DimensionMismatch, "belief sets disagree on the number of states");
    }
    names.push_back(set.name());
  }
  check_unique(names, "belief set");
  BeliefCollection c;
  c.sets_ = std::move(sets);
  return c;
}

std::optional<std::size_t> BeliefCollection::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].name() == name) return i;
  }
  return std::nullopt;
}

std::size_t BeliefCollection::total_vertices() const {
  std::size_t n = 0;
  for (const auto& set : sets_) n += set.size();
  return n;
}

Instance Instance::make(StateSpace states, PrizeSet prizes, UtilityFunction utility,
                        BeliefCollection collection, std::vector<NamedAct> acts) {
  if (utility.size() != prizes.size()) {
    throw Error(ErrorCode::DimensionMismatch, "utility is not dimensioned against the prize set");
  }
  if (collection.num_states() != states.size()) {
    throw Error(ErrorCode::DimensionMismatch, "priors are not dimensioned against the state space");
  }
  std::set<std::string_view> names;
  for (const auto& named : acts) {
    if (named.act.num_states() != states.size() || named.act.at(0).size() != prizes.size()) {
      throw Error(ErrorCode::DimensionMismatch, "act '" + named.name + "' has the wrong shape");
    }
    if (!names.insert(named.name).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate act name '" + named.name + "'");
    }
  }
  return Instance{std::move(states), std::move(prizes), std::move(utility), std::move(collection),
                  std::move(acts)};
}

const Act* Instance::find_act(std::string_view name) const {
  for (const auto& named : acts) {
    if (named.name == name) return &named.act;
  }
  return nullptr;
}

const Act& Instance::act(std::string_view name) const {
  if (const Act* f = find_act(name)) return *f;
  throw Error(ErrorCode::UnknownAct, "instance has no act named '" + std::string(name) + "'");
}

Rational utility_of_lottery(const UtilityFunction& u, const Lottery& x) {
  if (u.size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "lottery and utility disagree on the prize set");
  }
  Rational total = 0;
  for (std::size_t z = 0; z < x.size(); ++z) total += x.weight(z) * u.value(z);
  return total;
}

UtilityVector utility_vector(const UtilityFunction& u, const Act& f) {
  std::vector<Rational> out;
  out.reserve(f.num_states());
  for (const auto& x : f.lotteries()) out.push_back(utility_of_lottery(u, x));
  return UtilityVector(std::move(out));
}

Rational expected_value(const Prior& p, const UtilityVector& phi) {
  if (p.size() != phi.size()) {
    throw Error(ErrorCode::DimensionMismatch, "prior and utility vector disagree on the state count");
  }
  Rational total = 0;
  for (std::size_t s = 0; s < p.size(); ++s) total += p[s] * phi[s];
  return total;
}

Lottery mix_lotteries(const Rational& alpha, const Lottery& x, const Lottery& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot mix lotteries over different prize sets");
  }
  const Rational beta = 1 - alpha;
  std::vector<Rational> w(x.size());
  for (std::size_t z = 0; z < x.size(); ++z) w[z] = alpha * x.weight(z) + beta * y.weight(z);
  return Lottery::make(std::move(w));
}

Act mix_acts(const Rational& alpha, const Act& f, const Act& g) {
  if (sgn(alpha) < 0 || alpha > 1) {
    throw Error(ErrorCode::AlphaOutOfRange, "mixture weight " + to_string(alpha) + " outside [0, 1]");
  }
  if (f.num_states() != g.num_states()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot mix acts over different state spaces");
  }
  std::vector<Lottery> out;
  out.reserve(f.num_states());
  for (std::size_t s = 0; s < f.num_states(); ++s) out.push_back(mix_lotteries(alpha, f.at(s), g.at(s)));
  return Act::make(std::move(out));
}

bool statewise_dominates(const UtilityVector& f, const UtilityVector& g) {
  require_same_size(f, g);
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (f[s] < g[s]) return false;
  }
  return true;
}

bool statewise_dominates(const UtilityFunction& u, const Act& f, const Act& g) {
  return statewise_dominates(utility_vector(u, f), utility_vector(u, g));
}

bool statewise_dominates(const Instance& inst, const Act& f, const Act& g) {
  return statewise_dominates(inst.utility, f, g);
}

Act act_with_utilities(const UtilityFunction& u, const UtilityVector& target) {
  const Rational& lo = u.lowest();
  const Rational& hi = u.highest();
  const Rational span = hi - lo;
  std::vector<Lottery> by_state;
  by_state.reserve(target.size());
  for (std::size_t s = 0; s < target.size(); ++s) {
    if (target[s] < lo || target[s] > hi) {
      throw Error(ErrorCode::RadiusExceedsUtilityRange,
                  "utility " + to_string(target[s]) + " outside [" + to_string(lo) + ", " + to_string(hi) + "]");
    }
    std::vector<Rational> w(u.size(), Rational(0));
    const Rational top = (target[s] - lo) / span;
    w[u.best_prize()] += top;
    w[u.worst_prize()] += 1 - top;
    by_state.push_back(Lottery::make(std::move(w)));
  }
  return Act::make(std::move(by_state));
}

}  // namespace ambipref

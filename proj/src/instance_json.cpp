#include "ambipref/instance_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ambipref {

using nlohmann::json;

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return parse_rational(value.dump());
  }
  throw Error(ErrorCode::MalformedRational, "expected rational string or integer, got " + value.dump());
}

json rational_to_json(const Rational& value) { return to_string(value); }

json to_json(const UtilityVector& phi) {
  json out = json::array();
  for (const auto& v : phi.entries()) out.push_back(to_string(v));
  return out;
}

json to_json(const Prior& p) {
  json out = json::array();
  for (const auto& v : p.probabilities()) out.push_back(to_string(v));
  return out;
}

namespace {

// Accumulates issues; each `attempt` runs a step and records a failure
// instead of aborting, so independent sections are all checked.
class IssueLog {
 public:
  template <class F>
  bool attempt(const std::string& path, F&& step) {
    try {
      step();
      return true;
    } catch (const ValidationError& e) {
      for (auto issue : e.issues()) {
        issue.path = path + issue.path;
        issues_.push_back(std::move(issue));
      }
    } catch (const Error& e) {
      issues_.push_back({e.code(), path, e.what()});
    } catch (const json::exception& e) {
      issues_.push_back({ErrorCode::MalformedDocument, path, e.what()});
    }
    return false;
  }

  void add(ErrorCode code, std::string path, std::string message) {
    issues_.push_back({code, std::move(path), std::move(message)});
  }

  bool empty() const { return issues_.empty(); }
  std::vector<Issue> take() { return std::move(issues_); }

 private:
  std::vector<Issue> issues_;
};

std::vector<std::string> label_list(const json& raw, const char* key) {
  if (!raw.contains(key)) throw Error(ErrorCode::MalformedDocument, std::string("missing \"") + key + "\"");
  const json& arr = raw.at(key);
  if (!arr.is_array()) throw Error(ErrorCode::MalformedDocument, std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw Error(ErrorCode::MalformedDocument, "labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Lottery lottery_from_json(const json& raw, const PrizeSet& prizes) {
  if (!raw.is_object()) throw Error(ErrorCode::MalformedDocument, "lottery must be an object prize -> weight");
  std::vector<Rational> w(prizes.size(), Rational(0));
  for (const auto& [label, weight] : raw.items()) {
    const auto z = prizes.index_of(label);
    if (!z) throw Error(ErrorCode::UnknownLabel, "unknown prize '" + label + "'");
    w[*z] = rational_from_json(weight);
  }
  return Lottery::make(std::move(w));
}

}  // namespace

Instance validate_instance(const json& raw) {
  if (!raw.is_object()) {
    throw ValidationError({{ErrorCode::MalformedDocument, "", "instance must be a JSON object"}});
  }
  IssueLog log;

  std::optional<StateSpace> states;
  log.attempt("/states", [&] { states = StateSpace::make(label_list(raw, "states")); });
  std::optional<PrizeSet> prizes;
  log.attempt("/prizes", [&] { prizes = PrizeSet::make(label_list(raw, "prizes")); });

  std::optional<UtilityFunction> utility;
  if (!raw.contains("utility") || !raw.at("utility").is_object()) {
    log.add(ErrorCode::MalformedDocument, "/utility", "\"utility\" must be an object prize -> value");
  } else if (prizes) {
    log.attempt("/utility", [&] {
      std::vector<std::optional<Rational>> values(prizes->size());
      for (const auto& [label, value] : raw.at("utility").items()) {
        const auto z = prizes->index_of(label);
        if (!z) throw Error(ErrorCode::UnknownLabel, "utility names unknown prize '" + label + "'");
        values[*z] = rational_from_json(value);
      }
      std::vector<Rational> dense;
      for (std::size_t z = 0; z < values.size(); ++z) {
        if (!values[z]) {
          throw Error(ErrorCode::DimensionMismatch, "utility missing prize '" + prizes->label(z) + "'");
        }
        dense.push_back(*values[z]);
      }
      utility = UtilityFunction::make(std::move(dense));
    });
  }

  std::optional<BeliefCollection> collection;
  if (!raw.contains("belief_collection") || !raw.at("belief_collection").is_array()) {
    log.add(ErrorCode::MalformedDocument, "/belief_collection", "\"belief_collection\" must be an array");
  } else if (raw.at("belief_collection").empty()) {
    log.add(ErrorCode::EmptyCollection, "/belief_collection", "belief collection must be nonempty");
  } else {
    std::vector<BeliefSet> sets;
    bool sets_ok = true;
    const json& arr = raw.at("belief_collection");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string base = "/belief_collection/" + std::to_string(i);
      const json& entry = arr[i];
      if (!entry.is_object() || !entry.contains("vertices") || !entry.at("vertices").is_array()) {
        log.add(ErrorCode::MalformedDocument, base, "belief set needs a \"vertices\" array");
        sets_ok = false;
        continue;
      }
      const std::string name =
          entry.contains("name") && entry.at("name").is_string() ? entry.at("name").get<std::string>()
                                                                 : "P" + std::to_string(i + 1);
      std::vector<Prior> vertices;
      bool vertices_ok = true;
      const json& vs = entry.at("vertices");
      for (std::size_t j = 0; j < vs.size(); ++j) {
        const std::string path = base + "/vertices/" + std::to_string(j);
        vertices_ok &= log.attempt(path, [&] {
          if (!vs[j].is_array()) throw Error(ErrorCode::MalformedDocument, "vertex must be an array");
          std::vector<Rational> p;
          for (const auto& v : vs[j]) p.push_back(rational_from_json(v));
          if (states && p.size() != states->size()) {
            throw Error(ErrorCode::DimensionMismatch, "vertex has " + std::to_string(p.size()) +
                                                          " entries, expected " + std::to_string(states->size()));
          }
          vertices.push_back(Prior::make(std::move(p)));
        });
      }
      if (!vertices_ok) {
        sets_ok = false;
        continue;
      }
      sets_ok &= log.attempt(base, [&] { sets.push_back(BeliefSet::make(name, std::move(vertices))); });
    }
    if (sets_ok) {
      log.attempt("/belief_collection", [&] { collection = BeliefCollection::make(std::move(sets)); });
    }
  }

  std::vector<NamedAct> acts;
  if (raw.contains("acts")) {
    const json& obj = raw.at("acts");
    if (!obj.is_object()) {
      log.add(ErrorCode::MalformedDocument, "/acts", "\"acts\" must be an object name -> act");
    } else if (states && prizes) {
      for (const auto& [name, body] : obj.items()) {
        const std::string path = "/acts/" + name;
        log.attempt(path, [&] {
          if (!body.is_object()) throw Error(ErrorCode::MalformedDocument, "act must map states to lotteries");
          std::vector<std::optional<Lottery>> by_state(states->size());
          for (const auto& [state, lottery] : body.items()) {
            const auto s = states->index_of(state);
            if (!s) throw Error(ErrorCode::UnknownLabel, "unknown state '" + state + "'");
            by_state[*s] = lottery_from_json(lottery, *prizes);
          }
          std::vector<Lottery> dense;
          for (std::size_t s = 0; s < by_state.size(); ++s) {
            if (!by_state[s]) {
              throw Error(ErrorCode::DimensionMismatch, "act leaves state '" + states->label(s) + "' unmapped");
            }
            dense.push_back(*by_state[s]);
          }
          acts.push_back({name, Act::make(std::move(dense))});
        });
      }
    }
  }

  if (!log.empty() || !states || !prizes || !utility || !collection) {
    auto issues = log.take();
    if (issues.empty()) issues.push_back({ErrorCode::MalformedDocument, "", "incomplete instance"});
    throw ValidationError(std::move(issues));
  }
  return Instance::make(std::move(*states), std::move(*prizes), std::move(*utility), std::move(*collection),
                        std::move(acts));
}

Instance parse_instance(std::string_view text) {
  json raw;
  try {
    raw = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({{ErrorCode::MalformedDocument, "", e.what()}});
  }
  return validate_instance(raw);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedDocument, "cannot open instance file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

json to_json(const Instance& inst) {
  json out = json::object();
  out["states"] = inst.states.labels();
  out["prizes"] = inst.prizes.labels();
  json utility = json::object();
  for (std::size_t z = 0; z < inst.prizes.size(); ++z) utility[inst.prizes.label(z)] = to_string(inst.utility.value(z));
  out["utility"] = utility;
  json sets = json::array();
  for (const auto& set : inst.collection.sets()) {
    json vertices = json::array();
    for (const auto& p : set.vertices()) vertices.push_back(to_json(p));
    sets.push_back({{"name", set.name()}, {"vertices", vertices}});
  }
  out["belief_collection"] = sets;
  json acts = json::object();
  for (const auto& named : inst.acts) {
    json body = json::object();
    for (std::size_t s = 0; s < inst.states.size(); ++s) {
      json lottery = json::object();
      const Lottery& x = named.act.at(s);
      for (std::size_t z = 0; z < x.size(); ++z) {
        if (sgn(x.weight(z)) != 0) lottery[inst.prizes.label(z)] = to_string(x.weight(z));
      }
      body[inst.states.label(s)] = lottery;
    }
    acts[named.name] = body;
  }
  out["acts"] = acts;
  return out;
}

}  // namespace ambipref

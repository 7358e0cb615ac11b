#include "ambipref/report_json.hpp"

#include "ambipref/instance_json.hpp"

namespace ambipref {

namespace {

using nlohmann::json;

json act_json(const Instance& inst, const Act& act) {
  json j;
  j["utility"] = to_json(utility_vector(inst.utility, act));
  json lotteries = json::object();
  for (std::size_t s = 0; s < act.num_states(); ++s) {
    json lottery = json::object();
    for (std::size_t z = 0; z < inst.prizes.size(); ++z) {
      const Rational& w = act.at(s).weight(z);
      if (sgn(w) != 0) lottery[inst.prizes.label(z)] = to_string(w);
    }
    lotteries[inst.states.label(s)] = std::move(lottery);
  }
  j["lotteries"] = std::move(lotteries);
  return j;
}

json certificate_json(const Intersection& result) {
  if (const auto* common = std::get_if<CommonPrior>(&result)) {
    json weights_a = json::array();
    json weights_b = json::array();
    for (const auto& w : common->first_weights) weights_a.push_back(to_string(w));
    for (const auto& w : common->second_weights) weights_b.push_back(to_string(w));
    return {{"intersect", true},
            {"common_prior", to_json(common->prior)},
            {"first_weights", weights_a},
            {"second_weights", weights_b}};
  }
  const auto& cert = std::get<Disjoint>(result).certificate;
  return {{"intersect", false},
          {"phi1", to_json(cert.phi1)},
          {"phi2", to_json(cert.phi2)},
          {"slack", to_string(cert.slack)}};
}

}  // namespace

json to_json(const MarginProfile& profile) {
  return {{"maxmin", to_string(profile.maxmin)}, {"minmax", to_string(profile.minmax)}};
}

json to_json(const AuditReport& report, const Battery& battery) {
  json j;
  j["axiom"] = std::string(to_string(report.axiom));
  j["model"] = to_string(report.model);
  j["battery"] = {{"description", report.battery}, {"size", report.battery_size}};
  j["verdict"] = report.passed ? "pass" : "fail";
  j["checked"] = report.checked;
  j["violations"] = report.violations;
  j["boundary_flags"] = report.boundary_flags;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    json wj;
    json acts = json::array();
    for (std::size_t i : w.acts) {
      acts.push_back({{"index", i}, {"utility", to_json(battery.utilities.at(i))}});
    }
    wj["acts"] = std::move(acts);
    if (w.alpha) wj["alpha"] = to_string(*w.alpha);
    if (w.lambda) wj["lambda"] = to_string(*w.lambda);
    if (w.clause) wj["clause"] = w.clause;
    json judgments = json::array();
    for (const auto& jd : w.judgments) judgments.push_back({{"claim", jd.claim}, {"margin", to_string(jd.margin)}});
    wj["judgments"] = std::move(judgments);
    if (!w.note.empty()) wj["note"] = w.note;
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

json to_json(const AnalysisReport& report, const Instance& inst) {
  json j;
  json pairs = json::array();
  for (const auto& entry : report.pairwise.pairs) {
    json p = certificate_json(entry.result);
    p["first"] = inst.collection.at(entry.first).name();
    p["second"] = inst.collection.at(entry.second).name();
    pairs.push_back(std::move(p));
  }
  j["pairwise_intersections"] = std::move(pairs);
  if (report.cutting) {
    json straddles = json::array();
    for (std::size_t i = 0; i < report.cutting->straddles.size(); ++i) {
      const auto& st = report.cutting->straddles[i];
      const BeliefSet& set = inst.collection.at(i);
      straddles.push_back({{"set", set.name()},
                           {"plus", to_json(set.vertex(st.plus))},
                           {"minus", to_json(set.vertex(st.minus))}});
    }
    j["cutting"] = {{"normal", to_json(report.cutting->normal)},
                    {"offset", to_string(report.cutting->offset)},
                    {"straddles", std::move(straddles)}};
  } else {
    j["cutting"] = nullptr;
  }
  j["complete_param"] = report.complete_param;
  j["cbt_param"] = report.cbt_param;
  json commutes = {{"commutes", report.commutes.commutes}, {"checked", report.commutes.checked}};
  if (report.commutes.counterexample) {
    commutes["counterexample"] = to_json(*report.commutes.counterexample);
    commutes["profile"] = to_json(*report.commutes.counterexample_profile);
  }
  j["commutes"] = std::move(commutes);
  j["seu_collapse"] = report.seu_collapse ? to_json(*report.seu_collapse) : json(nullptr);
  if (report.incompleteness_witness) {
    const auto& w = *report.incompleteness_witness;
    j["incompleteness_witness"] = {{"act", act_json(inst, w.act)},
                                   {"reference", act_json(inst, w.reference)},
                                   {"act_over_reference", to_json(w.forward)},
                                   {"reference_over_act", to_json(w.backward)}};
  }
  if (report.cbt_witness) {
    const auto& w = *report.cbt_witness;
    j["cbt_witness"] = {{"x0", act_json(inst, w.low)},
                        {"f", act_json(inst, w.act)},
                        {"x_eps", act_json(inst, w.high)},
                        {"margins",
                         {{"x0 >= f", to_string(w.low_over_act)},
                          {"f >= x_eps", to_string(w.act_over_high)},
                          {"x0 >= x_eps", to_string(w.low_over_high)}}}};
  }
  return j;
}

json to_json(const VerificationReport& report) {
  const VerifyOptions& o = report.options;
  json j;
  j["schema_version"] = VerificationReport::schema_version;
  j["seeds"] = {{"first", o.first_seed}, {"last", o.last_seed}};
  j["params"] = {{"num_states", o.params.num_states},
                 {"num_sets", o.params.num_sets},
                 {"vertices_per_set", o.params.vertices_per_set},
                 {"denominator_bound", o.params.denominator_bound}};
  j["battery"] = {{"resolution", o.resolution}, {"radius", to_string(o.radius)}};
  j["hand_built"] = o.hand_built;
  j["verdict"] = report.passed ? "pass" : "fail";
  json suites = json::array();
  for (const auto& s : report.suites) {
    json sj;
    sj["id"] = s.id;
    sj["title"] = s.title;
    sj["instances"] = s.instances;
    sj["batteries"] = s.batteries;
    sj["verdict"] = s.passed ? "pass" : "fail";
    json cex = json::array();
    for (const auto& c : s.counterexamples) cex.push_back({{"instance", c.instance}, {"message", c.message}});
    sj["counterexamples"] = std::move(cex);
    sj["boundary_flags"] = s.boundary_flags;
    sj["stats"] = s.stats;
    if (!s.findings.empty()) sj["findings"] = s.findings;
    suites.push_back(std::move(sj));
  }
  j["suites"] = std::move(suites);
  return j;
}

json evaluate_pair(const Instance& inst, const ModelKind& kind, std::string_view left, std::string_view right) {
  check_model(kind, inst.collection);
  const UtilityVector phi = utility_vector(inst.utility, inst.act(left)) - utility_vector(inst.utility, inst.act(right));
  const Rational forward = model_margin(kind, inst.collection, phi);
  const Rational backward = model_margin(kind, inst.collection, -phi);
  json doc;
  doc["model"] = to_string(kind);
  doc["left"] = left;
  doc["right"] = right;
  doc["relation"] = std::string(to_string(relation_from(sgn(forward) >= 0, sgn(backward) >= 0)));
  doc["difference"] = to_json(phi);
  doc["margins"] = {{"left_over_right", to_string(forward)},
                    {"right_over_left", to_string(backward)},
                    {"profile", to_json(margin_profile(inst.collection, phi))}};
  doc["robust"] = {{"left_over_right", sgn(forward) > 0}, {"right_over_left", sgn(backward) > 0}};
  return doc;
}

json audit_document(const Instance& inst, const ModelKind& kind, const std::vector<AxiomKind>& axioms,
                    const Battery& battery, const AuditOptions& options) {
  json reports = json::array();
  if (axioms.empty()) {
    for (const auto& r : audit_suite(kind, inst, battery, options)) reports.push_back(to_json(r, battery));
  } else {
    for (AxiomKind a : axioms) reports.push_back(to_json(audit(a, kind, inst, battery, options), battery));
  }
  return json{{"model", to_string(kind)}, {"reports", std::move(reports)}};
}

}  // namespace ambipref

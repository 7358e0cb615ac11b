#include "ambipref/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

#include "ambipref/battery.hpp"
#include "ambipref/instance_json.hpp"

namespace ambipref {

namespace {

struct SuiteInfo {
  const char* id;
  const char* title;
};

constexpr SuiteInfo kSuites[] = {
    {"thm2", "disjunctive model passes completeness"},
    {"thm3", "conjunctive model passes constant-bound transitivity"},
    {"thm4", "half-mixture model passes completeness and constant-bound transitivity"},
    {"prop1", "no cutting hyperplane and pairwise intersection imply max-min commutativity"},
    {"prop2", "two-state collapse to a single prior"},
    {"prop3", "cutting hyperplane decides completeness"},
    {"prop4", "pairwise intersection decides constant-bound transitivity"},
    {"prop5", "conjunctive model passes negative completeness"},
    {"prop6", "disjunctive model passes negative constant-bound transitivity"},
    {"lemma3", "completeness agrees with negative constant-bound transitivity"},
    {"fig4", "unequal mixture violates completeness or constant-bound transitivity"},
};

constexpr std::size_t kMaxFindings = 5;

Prior binary(const Rational& p) { return Prior::make({p, 1 - p}); }

Instance two_state_instance(std::vector<std::pair<Rational, Rational>> intervals) {
  std::vector<BeliefSet> sets;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& [lo, hi] = intervals[i];
    sets.push_back(BeliefSet::make("P" + std::to_string(i + 1), {binary(lo), binary(hi)}));
  }
  const Lottery worst = Lottery::degenerate(2, 0);
  const Lottery best = Lottery::degenerate(2, 1);
  std::vector<NamedAct> acts{{"f", Act::make({best, worst})}, {"g", Act::make({worst, best})}};
  return Instance::make(StateSpace::make({"s1", "s2"}), PrizeSet::make({"z0", "z1"}),
                        UtilityFunction::make({Rational(0), Rational(1)}), BeliefCollection::make(std::move(sets)),
                        std::move(acts));
}

// Lazily shared per-instance state.
class InstanceCtx {
 public:
  InstanceCtx(std::string label, Instance inst, const VerifyOptions& options)
      : label_(std::move(label)), inst_(std::move(inst)),
        battery_(generate_act_grid(inst_, options.resolution, options.radius)),
        resolution_(options.resolution), radius_(options.radius) {}

  const std::string& label() const { return label_; }
  const Instance& inst() const { return inst_; }
  const Battery& battery() const { return battery_; }

  const AnalysisReport& analysis() {
    if (!analysis_) analysis_ = analyze(inst_);
    return *analysis_;
  }

  // Lattice at twice the resolution: contains every midpoint of two acts of
  // battery(), so incomparable pairs there show up against a constant here.
  const Battery& midpoint_battery() {
    if (!midpoint_battery_) midpoint_battery_ = generate_act_grid(inst_, 2 * resolution_, radius_);
    return *midpoint_battery_;
  }

  const AuditReport& audit_of(AxiomKind axiom, const ModelKind& kind, bool midpoints = false) {
    const std::string key = std::string(to_string(axiom)) + "|" + to_string(kind) + (midpoints ? "|mid" : "");
    auto it = audits_.find(key);
    if (it == audits_.end()) {
      AuditOptions options;
      options.max_witnesses = 4;
      const Battery& b = midpoints ? midpoint_battery() : battery_;
      it = audits_.emplace(key, audit(axiom, kind, inst_, b, options)).first;
    }
    return it->second;
  }

 private:
  std::string label_;
  Instance inst_;
  Battery battery_;
  int resolution_;
  Rational radius_;
  std::optional<Battery> midpoint_battery_;
  std::optional<AnalysisReport> analysis_;
  std::map<std::string, AuditReport> audits_;
};

struct SuiteOutcome {
  bool applied = false;
  std::vector<std::string> problems;
  std::size_t boundary_flags = 0;
  std::map<std::string, std::size_t> stats;
  std::optional<nlohmann::json> finding;
  std::vector<std::string> extra_batteries;
};

SuiteOutcome applied() {
  SuiteOutcome out;
  out.applied = true;
  return out;
}

const ModelKind kGb = models::GeneralizedBewley{};
const ModelKind kDisjunctive = models::Disjunctive{};
const ModelKind kConjunctive = models::Conjunctive{};
const ModelKind kHalf = models::HalfMixture{};

std::string describe_failure(const AuditReport& r) {
  return std::string(to_string(r.axiom)) + " audit of " + to_string(r.model) + " found " +
         std::to_string(r.violations) + " violation(s)";
}

void expect_pass(SuiteOutcome& out, InstanceCtx& ctx, AxiomKind axiom, const ModelKind& kind) {
  const AuditReport& r = ctx.audit_of(axiom, kind);
  out.boundary_flags += r.boundary_flags;
  if (!r.passed) out.problems.push_back(describe_failure(r));
}

Rational gb_margin(const Instance& inst, const UtilityVector& phi) { return model_margin(kGb, inst.collection, phi); }

SuiteOutcome suite_prop1(InstanceCtx& ctx) {
  SuiteOutcome out = applied();
  const AnalysisReport& a = ctx.analysis();
  const bool param = a.complete_param && a.cbt_param;
  out.stats["param_holds"] = param;
  out.stats["commutes"] = a.commutes.commutes;
  if (param && !a.commutes.commutes) {
    out.problems.push_back("parametric conditions hold but max-min and min-max differ");
  }
  return out;
}

SuiteOutcome suite_prop2(InstanceCtx& ctx) {
  SuiteOutcome out;
  const Instance& inst = ctx.inst();
  if (inst.states.size() != 2) return out;
  out.applied = true;
  const AnalysisReport& a = ctx.analysis();
  const bool param = a.complete_param && a.cbt_param;
  out.stats["param_holds"] = param;
  out.stats["collapses"] = a.seu_collapse.has_value();
  if (!param) return out;
  if (!a.seu_collapse) {
    out.problems.push_back("parametric conditions hold but no collapsing prior exists");
    return out;
  }
  const BatteryEvaluator gb(inst.collection, ctx.battery(), kGb);
  const BatteryEvaluator seu(inst.collection, ctx.battery(), models::Seu{*a.seu_collapse});
  for (std::size_t i = 0; i < ctx.battery().size(); ++i) {
    for (std::size_t j = 0; j < ctx.battery().size(); ++j) {
      if (gb.margin_pair(i, j) != seu.margin_pair(i, j)) {
        out.problems.push_back("collapsed prior disagrees with the generalized Bewley margin on acts " +
                               std::to_string(i) + ", " + std::to_string(j));
        return out;
      }
    }
  }
  return out;
}

SuiteOutcome suite_prop3(InstanceCtx& ctx) {
  SuiteOutcome out = applied();
  const Instance& inst = ctx.inst();
  const AnalysisReport& a = ctx.analysis();
  const AuditReport& completeness = ctx.audit_of(AxiomKind::Completeness, kGb);
  out.boundary_flags += completeness.boundary_flags;
  out.stats["cutting"] = a.cutting.has_value();
  out.stats["audit_detects"] = !completeness.passed;
  if (!a.cutting) {
    if (!completeness.passed) out.problems.push_back("no cutting hyperplane but " + describe_failure(completeness));
    return out;
  }
  if (!verify_cutting_hyperplane(inst.collection, *a.cutting)) {
    out.problems.push_back("cutting hyperplane fails re-verification");
  }
  const auto& w = *a.incompleteness_witness;
  const UtilityVector uf = utility_vector(inst.utility, w.act);
  const UtilityVector ur = utility_vector(inst.utility, w.reference);
  const Rational forward = gb_margin(inst, uf - ur);
  const Rational backward = gb_margin(inst, ur - uf);
  if (!(sgn(forward) < 0 && sgn(backward) < 0) || forward != w.forward.maxmin || backward != w.backward.maxmin) {
    out.problems.push_back("incompleteness witness does not replay");
  }
  return out;
}

SuiteOutcome suite_prop4(InstanceCtx& ctx) {
  SuiteOutcome out = applied();
  const Instance& inst = ctx.inst();
  const AnalysisReport& a = ctx.analysis();
  for (const auto& entry : a.pairwise.pairs) {
    if (!verify_intersection(inst.collection.at(entry.first), inst.collection.at(entry.second), entry.result)) {
      out.problems.push_back("intersection certificate for sets " + std::to_string(entry.first) + ", " +
                             std::to_string(entry.second) + " fails re-verification");
    }
  }
  out.stats["disjoint_pair"] = !a.cbt_param;
  if (a.cbt_param) {
    const AuditReport& cbt = ctx.audit_of(AxiomKind::ConstantBoundTransitivity, kGb);
    out.boundary_flags += cbt.boundary_flags;
    if (!cbt.passed) out.problems.push_back("all pairs intersect but " + describe_failure(cbt));
    return out;
  }
  const auto& w = *a.cbt_witness;
  const UtilityVector low = utility_vector(inst.utility, w.low);
  const UtilityVector act = utility_vector(inst.utility, w.act);
  const UtilityVector high = utility_vector(inst.utility, w.high);
  const Rational low_act = gb_margin(inst, low - act);
  const Rational act_high = gb_margin(inst, act - high);
  const Rational low_high = gb_margin(inst, low - high);
  const bool replays = low.is_constant() && high.is_constant() && high[0] > low[0] && sgn(low_act) >= 0 &&
                       sgn(act_high) >= 0 && sgn(low_high) < 0 && low_act == w.low_over_act &&
                       act_high == w.act_over_high && low_high == w.low_over_high;
  if (!replays) out.problems.push_back("constant-bound transitivity witness does not replay");
  out.stats["witness_replayed"] = replays;
  return out;
}

SuiteOutcome suite_lemma3(InstanceCtx& ctx) {
  SuiteOutcome out = applied();
  const AuditReport& c = ctx.audit_of(AxiomKind::Completeness, kGb);
  // The matching battery for the constant-bound side is the midpoint closure.
  const AuditReport& n = ctx.audit_of(AxiomKind::NegativeConstantBoundTransitivity, kGb, true);
  out.extra_batteries.push_back(ctx.midpoint_battery().description);
  out.boundary_flags += c.boundary_flags + n.boundary_flags;
  out.stats["completeness_fails"] = !c.passed;
  if (c.passed != n.passed) {
    out.problems.push_back(std::string("completeness audit ") + (c.passed ? "passes" : "fails") +
                           " but negative constant-bound transitivity audit " + (n.passed ? "passes" : "fails"));
  }
  return out;
}

// From a direction where max-min and min-max differ, the unequal mixture
// either separates a constant from an act in both directions or sandwiches
// two constants around an act in the wrong order.
SuiteOutcome suite_fig4(InstanceCtx& ctx) {
  SuiteOutcome out = applied();
  const Instance& inst = ctx.inst();
  const ModelKind alpha = models::AlphaMixture{Rational(3, 4)};
  for (AxiomKind axiom : {AxiomKind::Completeness, AxiomKind::ConstantBoundTransitivity}) {
    const AuditReport& r = ctx.audit_of(axiom, alpha);
    out.boundary_flags += r.boundary_flags;
    out.stats[std::string("battery_") + std::string(to_string(axiom)) + "_fails"] = !r.passed;
  }
  const AnalysisReport& a = ctx.analysis();
  if (!a.commutes.counterexample) return out;
  const UtilityVector& phi = *a.commutes.counterexample;
  const MarginProfile& profile = *a.commutes.counterexample_profile;
  const Rational forward = model_margin(alpha, inst.collection, phi);
  const Rational backward = model_margin(alpha, inst.collection, -phi);
  const Rational scale = inst.utility.half_range() / phi.sup_norm();
  const Rational mid = inst.utility.midpoint();
  const std::size_t n = inst.states.size();
  auto realize = [&](const UtilityVector& v) { return act_with_utilities(inst.utility, scale * v + mid); };
  auto constant = [&](const Rational& c) { return realize(UtilityVector::constant(n, c)); };
  auto margin = [&](const Act& l, const Act& r) {
    return model_margin(alpha, inst.collection, utility_vector(inst.utility, l) - utility_vector(inst.utility, r));
  };
  auto text = [](const Act& act, const Instance& i) { return to_json(utility_vector(i.utility, act)); };

  nlohmann::json finding;
  finding["instance"] = ctx.label();
  finding["alpha"] = "3/4";
  finding["direction"] = to_json(phi);
  finding["maxmin"] = to_string(profile.maxmin);
  finding["minmax"] = to_string(profile.minmax);
  bool replays = false;
  if (profile.maxmin > profile.minmax) {
    // -A(-phi) <= x < y <= A(phi)
    const Act f = realize(phi);
    const Act x = constant(-backward);
    const Act y = constant(forward);
    const Rational xf = margin(x, f), fy = margin(f, y), xy = margin(x, y);
    replays = sgn(xf) >= 0 && sgn(fy) >= 0 && sgn(xy) < 0;
    finding["violation"] = "constant-bound-transitivity";
    finding["utilities"] = {{"x", text(x, inst)}, {"f", text(f, inst)}, {"y", text(y, inst)}};
    finding["margins"] = {{"x >= f", to_string(xf)}, {"f >= y", to_string(fy)}, {"x >= y", to_string(xy)}};
  } else {
    // A(phi) < c < -A(-phi)
    const Act f = realize(phi);
    const Act x = constant((forward - backward) / 2);
    const Rational fx = margin(f, x), xf = margin(x, f);
    replays = sgn(fx) < 0 && sgn(xf) < 0;
    finding["violation"] = "completeness";
    finding["utilities"] = {{"f", text(f, inst)}, {"x", text(x, inst)}};
    finding["margins"] = {{"f >= x", to_string(fx)}, {"x >= f", to_string(xf)}};
  }
  finding["replayed"] = replays;
  if (!replays) {
    out.problems.push_back("unequal-mixture witness does not replay");
    return out;
  }
  out.stats["witnesses"] = 1;
  out.finding = std::move(finding);
  return out;
}

SuiteOutcome run_suite(const std::string& id, InstanceCtx& ctx) {
  SuiteOutcome out = applied();
  if (id == "thm2") {
    expect_pass(out, ctx, AxiomKind::Completeness, kDisjunctive);
  } else if (id == "thm3") {
    expect_pass(out, ctx, AxiomKind::ConstantBoundTransitivity, kConjunctive);
  } else if (id == "thm4") {
    expect_pass(out, ctx, AxiomKind::Completeness, kHalf);
    expect_pass(out, ctx, AxiomKind::ConstantBoundTransitivity, kHalf);
  } else if (id == "prop1") {
    out = suite_prop1(ctx);
  } else if (id == "prop2") {
    out = suite_prop2(ctx);
  } else if (id == "prop3") {
    out = suite_prop3(ctx);
  } else if (id == "prop4") {
    out = suite_prop4(ctx);
  } else if (id == "prop5") {
    expect_pass(out, ctx, AxiomKind::NegativeCompleteness, kConjunctive);
  } else if (id == "prop6") {
    expect_pass(out, ctx, AxiomKind::NegativeConstantBoundTransitivity, kDisjunctive);
  } else if (id == "lemma3") {
    out = suite_lemma3(ctx);
  } else if (id == "fig4") {
    out = suite_fig4(ctx);
  }
  return out;
}

struct WorkItem {
  std::string label;
  std::function<Instance()> make;
};

struct InstanceResult {
  std::string battery;
  std::vector<SuiteOutcome> outcomes;
  std::optional<std::string> error;
};

}  // namespace

std::vector<LabeledInstance> hand_built_instances() {
  return {
      {"hand:disjoint", two_state_instance({{Rational(1, 5), Rational(2, 5)}, {Rational(3, 5), Rational(4, 5)}})},
      {"hand:touching", two_state_instance({{Rational(1, 5), Rational(2, 5)}, {Rational(2, 5), Rational(3, 5)}})},
      {"hand:cutting", two_state_instance({{Rational(1, 5), Rational(1, 2)}, {Rational(2, 5), Rational(7, 10)}})},
      {"hand:overlap", two_state_instance({{Rational(1, 5), Rational(2, 5)}, {Rational(3, 10), Rational(1, 2)}})},
  };
}

Instance hand_built_instance(std::string_view name) {
  for (auto& entry : hand_built_instances()) {
    if (entry.label == name || entry.label == "hand:" + std::string(name)) return std::move(entry.instance);
  }
  throw Error(ErrorCode::UnknownSuite, "unknown hand-built instance '" + std::string(name) + "'");
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.id);
    return out;
  }();
  return ids;
}

std::vector<std::string> parse_suites(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string item(list.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& id : suite_ids()) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
      }
      continue;
    }
    if (std::find(suite_ids().begin(), suite_ids().end(), item) == suite_ids().end()) {
      throw Error(ErrorCode::UnknownSuite, "unknown suite '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw Error(ErrorCode::UnknownSuite, "no suites given");
  return out;
}

std::size_t worker_count(std::size_t requested) {
  std::size_t n = requested;
  if (const char* env = std::getenv("AMBIPREF_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = n == 0 ? cap : std::min<std::size_t>(n, cap);
  }
  if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
  return n;
}

VerificationReport verify(const VerifyOptions& options) {
  for (const auto& id : options.suites) {
    if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end()) {
      throw Error(ErrorCode::UnknownSuite, "unknown suite '" + id + "'");
    }
  }
  if (options.suites.empty()) throw Error(ErrorCode::UnknownSuite, "no suites given");
  if (options.last_seed < options.first_seed) throw Error(ErrorCode::ParamsOutOfRange, "empty seed range");
  check_params(options.params);
  if (options.resolution < 1 || sgn(options.radius) <= 0 || options.radius > 1) {
    throw Error(ErrorCode::ParamsOutOfRange, "battery needs resolution >= 1 and radius in (0, 1]");
  }

  std::vector<WorkItem> work;
  for (std::uint64_t seed = options.first_seed;; ++seed) {
    work.push_back({"seed:" + std::to_string(seed), [seed, &options] { return generate_instance(seed, options.params); }});
    if (seed == options.last_seed) break;
  }
  if (options.hand_built) {
    for (auto& h : hand_built_instances()) {
      auto shared = std::make_shared<Instance>(std::move(h.instance));
      work.push_back({h.label, [shared] { return *shared; }});
    }
  }

  std::vector<InstanceResult> results(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      try {
        InstanceCtx ctx(work[i].label, work[i].make(), options);
        results[i].battery = ctx.battery().description;
        for (const auto& id : options.suites) results[i].outcomes.push_back(run_suite(id, ctx));
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  const std::size_t threads = std::min(worker_count(options.threads), work.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.options = options;
  for (std::size_t s = 0; s < options.suites.size(); ++s) {
    SuiteResult suite;
    suite.id = options.suites[s];
    for (const auto& info : kSuites) {
      if (suite.id == info.id) suite.title = info.title;
    }
    std::size_t findings = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const InstanceResult& r = results[i];
      if (r.error) {
        suite.counterexamples.push_back({work[i].label, "error: " + *r.error});
        continue;
      }
      const SuiteOutcome& o = r.outcomes[s];
      if (!o.applied) continue;
      ++suite.instances;
      auto note_battery = [&suite](const std::string& b) {
        if (std::find(suite.batteries.begin(), suite.batteries.end(), b) == suite.batteries.end()) {
          suite.batteries.push_back(b);
        }
      };
      note_battery(r.battery);
      for (const auto& b : o.extra_batteries) note_battery(b);
      for (const auto& p : o.problems) suite.counterexamples.push_back({work[i].label, p});
      suite.boundary_flags += o.boundary_flags;
      for (const auto& [key, value] : o.stats) suite.stats[key] += value;
      if (o.finding) {
        ++findings;
        if (suite.findings.size() < kMaxFindings) suite.findings.push_back(*o.finding);
      }
    }
    suite.passed = suite.counterexamples.empty();
    if (suite.id == "fig4" && findings == 0) suite.passed = false;
    report.passed = report.passed && suite.passed;
    report.suites.push_back(std::move(suite));
  }
  return report;
}

}  // namespace ambipref

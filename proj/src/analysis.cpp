#include "ambipref/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "ambipref/battery.hpp"
#include "ambipref/lp.hpp"

namespace ambipref {

namespace {

using lp::Comparator;
using lp::Constraint;

// Variables: phi_0 .. phi_{n-1} in [-1, 1], then a free slack t.
lp::LinearProgram slack_program(std::size_t num_states) {
  lp::LinearProgram program;
  program.variables = num_states + 1;
  program.objective.assign(num_states + 1, Rational(0));
  program.objective.back() = 1;
  for (std::size_t s = 0; s < num_states; ++s) program.bounds.push_back(lp::LinearProgram::box(-1, 1));
  program.bounds.push_back(lp::LinearProgram::free());
  return program;
}

// sign * <p, phi> - t >= 0
Constraint slack_row(const Prior& p, int sign) {
  Constraint c;
  for (std::size_t s = 0; s < p.size(); ++s) c.coefficients.push_back(sign * p[s]);
  c.coefficients.push_back(Rational(-1));
  c.comparator = Comparator::GreaterEqual;
  c.rhs = 0;
  return c;
}

struct SlackOptimum {
  Rational slack;
  UtilityVector phi;
};

SlackOptimum solve_slack(const lp::LinearProgram& program) {
  const lp::Outcome outcome = lp::solve(program);
  const auto* opt = std::get_if<lp::Optimal>(&outcome);
  // phi is boxed and t <= <v, phi> <= 1, so the program is always bounded and feasible.
  if (!opt) throw std::logic_error("slack program must have an optimum");
  std::vector<Rational> phi(opt->point.begin(), opt->point.end() - 1);
  return {opt->value, UtilityVector(std::move(phi))};
}

void require_same_states(const BeliefSet& a, const BeliefSet& b) {
  if (a.num_states() != b.num_states()) {
    throw Error(ErrorCode::DimensionMismatch, "belief sets '" + a.name() + "' and '" + b.name() +
                                                  "' live on different state spaces");
  }
}

bool convex_weights(const std::vector<Rational>& w, std::size_t expected) {
  if (w.size() != expected) return false;
  Rational total = 0;
  for (const auto& x : w) {
    if (sgn(x) < 0) return false;
    total += x;
  }
  return total == 1;
}

std::vector<Rational> combine(const BeliefSet& set, const std::vector<Rational>& weights) {
  std::vector<Rational> point(set.num_states(), Rational(0));
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t s = 0; s < point.size(); ++s) point[s] += weights[i] * set.vertex(i)[s];
  }
  return point;
}

}  // namespace

Intersection polytopes_intersect(const BeliefSet& first, const BeliefSet& second) {
  require_same_states(first, second);
  const std::size_t n = first.num_states();

  lp::LinearProgram separation = slack_program(n);
  for (const auto& v : first.vertices()) separation.constraints.push_back(slack_row(v, 1));
  for (const auto& w : second.vertices()) separation.constraints.push_back(slack_row(w, -1));
  SlackOptimum best = solve_slack(separation);
  if (sgn(best.slack) > 0) {
    SametCertificate cert;
    cert.phi2 = -best.phi;
    cert.phi1 = std::move(best.phi);
    cert.slack = min_of(set_min(first, cert.phi1), set_min(second, cert.phi2));
    return Disjoint{std::move(cert)};
  }

  // Mixture weights (lambda over first, mu over second) reaching one point.
  const std::size_t a = first.size();
  const std::size_t b = second.size();
  std::vector<Constraint> rows;
  Constraint sum_first{std::vector<Rational>(a + b, Rational(0)), Comparator::Equal, Rational(1)};
  Constraint sum_second = sum_first;
  for (std::size_t i = 0; i < a; ++i) sum_first.coefficients[i] = 1;
  for (std::size_t j = 0; j < b; ++j) sum_second.coefficients[a + j] = 1;
  rows.push_back(sum_first);
  rows.push_back(sum_second);
  for (std::size_t s = 0; s < n; ++s) {
    Constraint row{std::vector<Rational>(a + b, Rational(0)), Comparator::Equal, Rational(0)};
    for (std::size_t i = 0; i < a; ++i) row.coefficients[i] = first.vertex(i)[s];
    for (std::size_t j = 0; j < b; ++j) row.coefficients[a + j] = -second.vertex(j)[s];
    rows.push_back(std::move(row));
  }
  const auto point = lp::feasible_point(a + b, rows);
  if (!point) throw std::logic_error("nonpositive separation slack but no common prior");
  CommonPrior common;
  common.first_weights.assign(point->begin(), point->begin() + static_cast<std::ptrdiff_t>(a));
  common.second_weights.assign(point->begin() + static_cast<std::ptrdiff_t>(a), point->end());
  common.prior = Prior::make(combine(first, common.first_weights));
  return common;
}

bool verify_intersection(const BeliefSet& first, const BeliefSet& second, const Intersection& result) {
  if (const auto* common = std::get_if<CommonPrior>(&result)) {
    if (!convex_weights(common->first_weights, first.size())) return false;
    if (!convex_weights(common->second_weights, second.size())) return false;
    const auto p = common->prior.probabilities();
    const auto x = combine(first, common->first_weights);
    const auto y = combine(second, common->second_weights);
    return std::equal(p.begin(), p.end(), x.begin(), x.end()) && std::equal(p.begin(), p.end(), y.begin(), y.end());
  }
  const auto& cert = std::get<Disjoint>(result).certificate;
  if (cert.phi1.size() != first.num_states() || cert.phi2.size() != second.num_states()) return false;
  const UtilityVector sum = cert.phi1 + cert.phi2;
  if (sum != UtilityVector::constant(sum.size(), 0)) return false;
  if (sgn(cert.slack) <= 0) return false;
  return cert.slack == min_of(set_min(first, cert.phi1), set_min(second, cert.phi2));
}

PairwiseResult pairwise_intersection_holds(const BeliefCollection& collection) {
  PairwiseResult out;
  for (std::size_t i = 0; i < collection.size(); ++i) {
    for (std::size_t j = i + 1; j < collection.size(); ++j) {
      Intersection result = polytopes_intersect(collection.at(i), collection.at(j));
      if (std::holds_alternative<Disjoint>(result) && !out.failing) {
        out.holds = false;
        out.failing = out.pairs.size();
      }
      out.pairs.push_back({i, j, std::move(result)});
    }
  }
  return out;
}

namespace {

class CuttingSearch {
 public:
  explicit CuttingSearch(const BeliefCollection& collection)
      : collection_(collection), program_(slack_program(collection.num_states())) {}

  std::optional<CuttingHyperplane> run() {
    for (const auto& set : collection_.sets()) {
      if (set.size() < 2) return std::nullopt;  // a single prior cannot be straddled strictly
    }
    chosen_.clear();
    if (!descend(0)) return std::nullopt;
    return found_;
  }

 private:
  bool descend(std::size_t depth) {
    const BeliefSet& set = collection_.at(depth);
    for (std::size_t plus = 0; plus < set.size(); ++plus) {
      for (std::size_t minus = 0; minus < set.size(); ++minus) {
        if (plus == minus) continue;
        // phi and -phi swap every straddle; fixing the first set's orientation halves the search.
        if (depth == 0 && plus > minus) continue;
        program_.constraints.push_back(slack_row(set.vertex(plus), 1));
        program_.constraints.push_back(slack_row(set.vertex(minus), -1));
        chosen_.push_back({plus, minus});
        const SlackOptimum opt = solve_slack(program_);
        bool done = false;
        if (sgn(opt.slack) > 0) {
          if (depth + 1 == collection_.size()) {
            found_ = CuttingHyperplane{opt.phi, Rational(0), chosen_};
            done = true;
          } else {
            done = descend(depth + 1);
          }
        }
        program_.constraints.pop_back();
        program_.constraints.pop_back();
        chosen_.pop_back();
        if (done) return true;
      }
    }
    return false;
  }

  const BeliefCollection& collection_;
  lp::LinearProgram program_;
  std::vector<CuttingHyperplane::Straddle> chosen_;
  std::optional<CuttingHyperplane> found_;
};

}  // namespace

std::optional<CuttingHyperplane> find_cutting_hyperplane(const BeliefCollection& collection) {
  return CuttingSearch(collection).run();
}

bool verify_cutting_hyperplane(const BeliefCollection& collection, const CuttingHyperplane& cut) {
  if (cut.straddles.size() != collection.size()) return false;
  if (cut.normal.size() != collection.num_states()) return false;
  for (std::size_t i = 0; i < collection.size(); ++i) {
    const BeliefSet& set = collection.at(i);
    const auto& st = cut.straddles[i];
    if (st.plus >= set.size() || st.minus >= set.size()) return false;
    if (!(expected_value(set.vertex(st.plus), cut.normal) > cut.offset)) return false;
    if (!(cut.offset > expected_value(set.vertex(st.minus), cut.normal))) return false;
  }
  return true;
}

CommutativityVerdict check_commutativity(const BeliefCollection& collection,
                                         const std::vector<UtilityVector>& battery) {
  CommutativityVerdict out;
  for (const auto& phi : battery) {
    ++out.checked;
    MarginProfile profile = margin_profile(collection, phi);
    if (profile.maxmin != profile.minmax) {
      out.commutes = false;
      out.counterexample = phi;
      out.counterexample_profile = std::move(profile);
      return out;
    }
  }
  return out;
}

std::optional<Prior> seu_collapse_binary(const BeliefCollection& collection) {
  if (collection.num_states() != 2) {
    throw Error(ErrorCode::WrongDimension, "SEU collapse is defined for exactly two states");
  }
  std::optional<Rational> a;
  std::optional<Rational> b;
  for (const auto& set : collection.sets()) {
    Rational lo = set.vertex(0)[0];
    Rational hi = lo;
    for (const auto& p : set.vertices()) {
      if (p[0] < lo) lo = p[0];
      if (p[0] > hi) hi = p[0];
    }
    if (!a || lo > *a) a = lo;
    if (!b || hi < *b) b = hi;
  }
  if (*a != *b) return std::nullopt;
  return Prior::make({*a, 1 - *a});
}

namespace {

Rational generalized_bewley(const BeliefCollection& collection, const UtilityVector& phi) {
  return margin_profile(collection, phi).maxmin;
}

}  // namespace

IncompletenessWitness build_incompleteness_witness(const Instance& inst, const CuttingHyperplane& cut) {
  const UtilityVector direction = cut.normal - cut.offset;
  const Rational norm = direction.sup_norm();
  if (sgn(norm) == 0) throw std::logic_error("cutting hyperplane with a constant direction");
  const Rational scale = inst.utility.half_range() / norm;
  const Rational mid = inst.utility.midpoint();

  IncompletenessWitness w{
      act_with_utilities(inst.utility, scale * direction + mid),
      act_with_utilities(inst.utility, UtilityVector::constant(inst.states.size(), mid)),
      scale * direction + mid,
      mid,
      margin_profile(inst.collection, scale * direction),
      margin_profile(inst.collection, -(scale * direction)),
  };
  return w;
}

CbtWitness build_cbt_witness(const Instance& inst, const SametCertificate& cert) {
  const Rational norm = cert.phi1.sup_norm();
  if (sgn(norm) == 0 || sgn(cert.slack) <= 0) throw std::logic_error("invalid separation certificate");
  const Rational scale = inst.utility.half_range() / norm;
  const Rational mid = inst.utility.midpoint();
  const std::size_t n = inst.states.size();
  const Rational epsilon = cert.slack / 2;

  CbtWitness w;
  w.low_utility = mid;
  w.high_utility = mid + scale * epsilon;
  w.act_utility = scale * cert.phi1 + mid;
  w.low = act_with_utilities(inst.utility, UtilityVector::constant(n, w.low_utility));
  w.high = act_with_utilities(inst.utility, UtilityVector::constant(n, w.high_utility));
  w.act = act_with_utilities(inst.utility, w.act_utility);
  w.low_over_act = generalized_bewley(inst.collection, UtilityVector::constant(n, w.low_utility) - w.act_utility);
  w.act_over_high = generalized_bewley(inst.collection, w.act_utility - w.high_utility);
  w.low_over_high = w.low_utility - w.high_utility;
  return w;
}

std::vector<UtilityVector> difference_vectors(const std::vector<UtilityVector>& utilities) {
  std::vector<UtilityVector> out;
  out.reserve(utilities.size() * utilities.size());
  for (const auto& f : utilities) {
    for (const auto& g : utilities) out.push_back(f - g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AnalysisReport analyze(const Instance& inst, const AnalysisLimits& limits) {
  const auto& collection = inst.collection;
  if (inst.states.size() > limits.max_states || collection.size() > limits.max_sets) {
    throw Error(ErrorCode::InstanceTooLarge, "analysis supports at most " + std::to_string(limits.max_states) +
                                                 " states and " + std::to_string(limits.max_sets) + " belief sets");
  }
  for (const auto& set : collection.sets()) {
    if (set.size() > limits.max_vertices) {
      throw Error(ErrorCode::InstanceTooLarge, "belief set '" + set.name() + "' exceeds " +
                                                   std::to_string(limits.max_vertices) + " vertices");
    }
  }

  AnalysisReport report;
  report.pairwise = pairwise_intersection_holds(collection);
  report.cbt_param = report.pairwise.holds;
  report.cutting = find_cutting_hyperplane(collection);
  report.complete_param = !report.cutting.has_value();
  // Differences of the resolution-2 radius-1 lattice form the resolution-4 radius-2 lattice.
  report.commutes = check_commutativity(collection, lattice_points(inst.states.size(), 4, Rational(2)));
  if (inst.states.size() == 2) report.seu_collapse = seu_collapse_binary(collection);
  if (report.cutting) report.incompleteness_witness = build_incompleteness_witness(inst, *report.cutting);
  if (report.pairwise.failing) {
    const auto& entry = report.pairwise.pairs[*report.pairwise.failing];
    report.cbt_witness = build_cbt_witness(inst, std::get<Disjoint>(entry.result).certificate);
  }
  return report;
}

}  // namespace ambipref

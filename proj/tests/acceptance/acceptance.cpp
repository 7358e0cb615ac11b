// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ambipref/analysis.hpp"
#include "ambipref/generator.hpp"
#include "ambipref/slices.hpp"
#include "ambipref/verify.hpp"

namespace {

using namespace ambipref;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and budgets.
constexpr long kGridDenominator = 100;         // oracle grid step 1/100
constexpr std::size_t kOracleInstances = 50;   // criterion 1
constexpr double kOracleBudgetSeconds = 60;    // criterion 1
constexpr double kSuiteBudgetSeconds = 120;    // criteria 2-4
constexpr std::uint64_t kLastSeed = 99;        // seeds 0..99
constexpr std::size_t kSliceInstances = 20;    // criterion 11
constexpr std::size_t kSliceSamples = 64;      // and its doubling

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void line(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// Grid priors with step 1/kGridDenominator over the simplex.
void simplex_grid(std::size_t n, std::vector<long>& counts, std::size_t at, long left,
                  const std::function<void(const std::vector<long>&)>& visit) {
  if (at + 1 == n) {
    counts[at] = left;
    visit(counts);
    return;
  }
  for (long c = 0; c <= left; ++c) {
    counts[at] = c;
    simplex_grid(n, counts, at + 1, left - c, visit);
  }
}

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by, const Rational& cx,
               const Rational& cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

// Exact hull membership for |S| <= 3, working in the first two coordinates.
class Hull {
 public:
  explicit Hull(const BeliefSet& set) : dim_(set.num_states()) {
    for (const auto& v : set.vertices()) pts_.push_back({v[0], dim_ > 2 ? v[1] : Rational(0)});
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    if (dim_ == 3 && pts_.size() >= 3) {
      // monotone chain, counter-clockwise; collinear input leaves fewer than 3 points
      auto chain = [](auto first, auto last) {
        std::vector<P> h;
        for (auto it = first; it != last; ++it) {
          while (h.size() >= 2 &&
                 sgn(cross(h[h.size() - 2].x, h[h.size() - 2].y, h.back().x, h.back().y, it->x, it->y)) <= 0) {
            h.pop_back();
          }
          h.push_back(*it);
        }
        h.pop_back();
        return h;
      };
      ring_ = chain(pts_.begin(), pts_.end());
      const auto upper = chain(pts_.rbegin(), pts_.rend());
      ring_.insert(ring_.end(), upper.begin(), upper.end());
      if (ring_.size() < 3) ring_.clear();
    }
  }

  bool contains(const Rational& x, const Rational& y) const {
    if (dim_ == 2) return pts_.front().x <= x && x <= pts_.back().x;
    if (ring_.size() >= 3) {
      for (std::size_t i = 0; i < ring_.size(); ++i) {
        const P& a = ring_[i];
        const P& b = ring_[(i + 1) % ring_.size()];
        if (sgn(cross(a.x, a.y, b.x, b.y, x, y)) < 0) return false;
      }
      return true;
    }
    // point or segment (collinear vertices)
    const P& a = pts_.front();
    const P& b = pts_.back();
    if (sgn(cross(a.x, a.y, b.x, b.y, x, y)) != 0) return false;
    const P p{x, y};
    return !(p < a) && !(b < p);
  }

 private:
  struct P {
    Rational x, y;
    friend bool operator<(const P& l, const P& r) { return l.x < r.x || (l.x == r.x && l.y < r.y); }
    friend bool operator==(const P& l, const P& r) { return l.x == r.x && l.y == r.y; }
  };
  std::size_t dim_;
  std::vector<P> pts_;
  std::vector<P> ring_;
};

// Criterion 1. The oracle points are the prior grid inside the hull plus the
// barycentric grid over the vertices, both at step 1/100; every one lies in the
// hull, so none may beat the vertex value, and the best must come within
// |phi|_inf * |S| / 100 of it.
void criterion_1() {
  const auto start = Clock::now();
  std::size_t sets = 0, prior_grid_points = 0, bary_points = 0, prior_grid_within = 0, prior_grid_sets = 0;
  bool ok = true;
  std::string first_problem;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (std::uint64_t seed = 0; seed < kOracleInstances; ++seed) {
    const Instance inst = generate_instance(seed, {3, 3, 3, 10});
    const std::size_t n = inst.states.size();
    std::vector<UtilityVector> phis{utility_vector(inst.utility, inst.act("f")) -
                                    utility_vector(inst.utility, inst.act("g"))};
    for (int t = 0; t < 3; ++t) {
      std::vector<Rational> e(n);
      for (auto& x : e) x = entry(rng);
      phis.emplace_back(std::move(e));
    }
    for (const auto& set : inst.collection.sets()) {
      ++sets;
      const Hull hull(set);
      std::vector<Prior> inside;
      std::vector<long> counts(n);
      simplex_grid(n, counts, 0, kGridDenominator, [&](const std::vector<long>& c) {
        const Rational x = ratio(c[0], kGridDenominator);
        const Rational y = n > 2 ? ratio(c[1], kGridDenominator) : Rational(0);
        if (!hull.contains(x, y)) return;
        std::vector<Rational> p(n);
        for (std::size_t s = 0; s < n; ++s) p[s] = ratio(c[s], kGridDenominator);
        inside.push_back(Prior::make(std::move(p)));
      });
      prior_grid_points += inside.size();
      std::vector<Prior> bary;
      std::vector<long> weights(set.size());
      simplex_grid(set.size(), weights, 0, kGridDenominator, [&](const std::vector<long>& w) {
        std::vector<Rational> p(n, Rational(0));
        for (std::size_t i = 0; i < set.size(); ++i) {
          for (std::size_t s = 0; s < n; ++s) p[s] += ratio(w[i], kGridDenominator) * set.vertex(i)[s];
        }
        bary.push_back(Prior::make(std::move(p)));
      });
      bary_points += bary.size();
      if (!inside.empty()) ++prior_grid_sets;
      bool all_within = !inside.empty();
      for (const auto& phi : phis) {
        const Rational lo = set_min(set, phi), hi = set_max(set, phi);
        const Rational tol = phi.sup_norm() * static_cast<long>(n) / kGridDenominator;
        auto scan = [&](const std::vector<Prior>& pts, Rational& gmin, Rational& gmax) {
          for (const auto& p : pts) {
            const Rational e = expected_value(p, phi);
            if (e < gmin) gmin = e;
            if (e > gmax) gmax = e;
          }
        };
        Rational gmin = hi + 1, gmax = lo - 1;
        scan(inside, gmin, gmax);
        if (!inside.empty()) all_within = all_within && gmin - lo <= tol && hi - gmax <= tol;
        scan(bary, gmin, gmax);
        const bool good = gmin >= lo && gmax <= hi && gmin - lo <= tol && hi - gmax <= tol;
        if (!good && ok) {
          ok = false;
          first_problem = " first problem: seed " + std::to_string(seed) + " set " + set.name();
        }
      }
      prior_grid_within += all_within;
    }
  }
  const double secs = seconds_since(start);
  ok = ok && secs < kOracleBudgetSeconds;
  line(1, ok,
       std::to_string(kOracleInstances) + " instances, " + std::to_string(sets) + " sets, " +
           std::to_string(prior_grid_points) + " prior-grid and " + std::to_string(bary_points) +
           " barycentric points; prior grid alone within tolerance on " + std::to_string(prior_grid_within) + "/" +
           std::to_string(prior_grid_sets) + " nonempty sets; " + std::to_string(secs) + "s" + first_problem);
}

const SuiteResult& suite(const VerificationReport& r, const std::string& id) {
  for (const auto& s : r.suites) {
    if (s.id == id) return s;
  }
  throw std::runtime_error("suite missing: " + id);
}

std::string summary(const SuiteResult& s) {
  std::string out = s.id + ": " + std::to_string(s.instances) + " instances, " +
                    std::to_string(s.counterexamples.size()) + " counterexamples";
  if (!s.counterexamples.empty()) {
    out += " (first: " + s.counterexamples.front().instance + " " + s.counterexamples.front().message + ")";
  }
  return out;
}

std::size_t stat(const SuiteResult& s, const std::string& key) {
  const auto it = s.stats.find(key);
  return it == s.stats.end() ? 0 : it->second;
}

void criteria_2_to_10() {
  VerifyOptions options;
  options.suites = suite_ids();
  options.first_seed = 0;
  options.last_seed = kLastSeed;
  options.resolution = 2;
  options.radius = 1;
  options.hand_built = true;
  const auto start = Clock::now();
  const VerificationReport r = verify(options);
  const double secs = seconds_since(start);
  const bool on_time = secs < kSuiteBudgetSeconds;
  const std::string timing = "; all suites " + std::to_string(secs) + "s";

  const auto& thm2 = suite(r, "thm2");
  const auto& thm3 = suite(r, "thm3");
  const auto& thm4 = suite(r, "thm4");
  line(2, thm2.passed && on_time, summary(thm2) + timing);
  line(3, thm3.passed && on_time, summary(thm3) + timing);
  line(4, thm4.passed && on_time, summary(thm4) + timing);

  const auto& p1 = suite(r, "prop1");
  line(5, p1.passed,
       summary(p1) + "; param holds on " + std::to_string(stat(p1, "param_holds")) + ", commutes on " +
           std::to_string(stat(p1, "commutes")));

  const auto& p3 = suite(r, "prop3");
  line(6, p3.passed,
       summary(p3) + "; cutting hyperplane on " + std::to_string(stat(p3, "cutting")) + ", audit detects on " +
           std::to_string(stat(p3, "audit_detects")));

  const auto& p4 = suite(r, "prop4");
  line(7, p4.passed && stat(p4, "witness_replayed") == stat(p4, "disjoint_pair") && stat(p4, "disjoint_pair") > 0,
       summary(p4) + "; disjoint pairs " + std::to_string(stat(p4, "disjoint_pair")) + ", witnesses replayed " +
           std::to_string(stat(p4, "witness_replayed")));

  const auto& p2 = suite(r, "prop2");
  const auto touching = seu_collapse_binary(hand_built_instance("touching").collection);
  const bool touching_ok = touching && (*touching)[0] == ratio(2, 5) && (*touching)[1] == ratio(3, 5);
  line(8, p2.passed && touching_ok,
       summary(p2) + "; param holds on " + std::to_string(stat(p2, "param_holds")) + ", collapses " +
           std::to_string(stat(p2, "collapses")) + "; touching p* = " +
           (touching ? "(" + to_string((*touching)[0]) + ", " + to_string((*touching)[1]) + ")" : "none"));

  const auto& p5 = suite(r, "prop5");
  const auto& p6 = suite(r, "prop6");
  const auto& l3 = suite(r, "lemma3");
  line(9, p5.passed && p6.passed && l3.passed,
       summary(p5) + "; " + summary(p6) + "; " + summary(l3) + "; boundary_flags " +
           std::to_string(p5.boundary_flags) + "/" + std::to_string(p6.boundary_flags) + "/" +
           std::to_string(l3.boundary_flags));

  const auto& f4 = suite(r, "fig4");
  std::string shown;
  if (!f4.findings.empty()) shown = "; first: " + f4.findings.front().dump();
  line(10, f4.passed && !f4.findings.empty(), summary(f4) + ", findings " + std::to_string(f4.findings.size()) + shown);
}

void criterion_11() {
  std::size_t checked = 0;
  bool ok = true;
  std::string first_problem;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (std::uint64_t seed = 0; seed < kSliceInstances; ++seed) {
    const Instance inst = generate_instance(seed);
    const std::size_t n = inst.states.size();
    std::vector<UtilityVector> dirs;
    std::vector<Rational> e1(n, Rational(0));
    e1[0] = 1;
    dirs.emplace_back(e1);
    UtilityVector fg = utility_vector(inst.utility, inst.act("f")) - utility_vector(inst.utility, inst.act("g"));
    if (fg.is_constant()) {
      std::vector<Rational> e2(n, Rational(0));
      e2[1] = 1;
      fg = UtilityVector(e2);
    }
    dirs.push_back(fg);
    for (;;) {
      std::vector<Rational> d(n);
      for (auto& x : d) x = entry(rng);
      UtilityVector v(std::move(d));
      if (!v.is_constant()) {
        dirs.push_back(std::move(v));
        break;
      }
    }
    for (const auto& d : dirs) {
      const SliceProfile coarse = slice_profile(inst.collection, d, kSliceSamples);
      const SliceProfile fine = slice_profile(inst.collection, d, 2 * kSliceSamples);
      for (Cone cone : {Cone::Conjunctive, Cone::Disjunctive, Cone::HalfMixture}) {
        ++checked;
        bool good = certify_slice_convexity(coarse, cone).passed && certify_slice_convexity(fine, cone).passed;
        for (std::size_t k = 0; k < kSliceSamples; ++k) {
          good = good && sgn(coarse.value(cone, k)) == sgn(fine.value(cone, 2 * k));
        }
        if (!good && ok) {
          first_problem = "; first problem: seed " + std::to_string(seed) + " " + std::string(to_string(cone));
        }
        ok = ok && good;
      }
    }
  }
  line(11, ok,
       std::to_string(kSliceInstances) + " instances x 3 directions x 3 cones = " + std::to_string(checked) +
           " certificates at n=" + std::to_string(kSliceSamples) + " and n=" + std::to_string(2 * kSliceSamples) +
           first_problem);
}

}  // namespace

int main() {
  try {
    criterion_1();
    criteria_2_to_10();
    criterion_11();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  return failures == 0 ? 0 : 1;
}

#include "ambipref/axioms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>

namespace ambipref {

namespace {

struct AxiomName {
  AxiomKind kind;
  std::string_view name;
};

constexpr std::array<AxiomName, 12> kNames{{
    {AxiomKind::NonTriviality, "non-triviality"},
    {AxiomKind::Reflexivity, "reflexivity"},
    {AxiomKind::UnambiguousCompleteness, "unambiguous-completeness"},
    {AxiomKind::UnambiguousTransitivity, "unambiguous-transitivity"},
    {AxiomKind::Monotonicity, "monotonicity"},
    {AxiomKind::Independence, "independence"},
    {AxiomKind::Completeness, "completeness"},
    {AxiomKind::Transitivity, "transitivity"},
    {AxiomKind::ConstantBoundTransitivity, "constant-bound-transitivity"},
    {AxiomKind::FavorableMixing, "favorable-mixing"},
    {AxiomKind::NegativeCompleteness, "negative-completeness"},
    {AxiomKind::NegativeConstantBoundTransitivity, "negative-constant-bound-transitivity"},
}};

class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Calls visit(h) for each set bit of (a & ~b), ascending.
template <class Visit>
void for_each_and_not(const std::uint64_t* a, const std::uint64_t* b, std::size_t words, Visit&& visit) {
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = a[w] & ~b[w];
    while (bits) {
      const int bit = std::countr_zero(bits);
      visit(w * 64 + static_cast<std::size_t>(bit));
      bits &= bits - 1;
    }
  }
}

class Context {
 public:
  Context(const ModelKind& kind, const Instance& inst, const Battery& battery)
      : kind_(kind), inst_(inst), battery_(battery), n_(battery.size()),
        evaluator_(inst.collection, battery, kind) {}

  std::size_t size() const { return n_; }
  const Battery& battery() const { return battery_; }
  const BatteryEvaluator& evaluator() const { return evaluator_; }
  const ModelKind& kind() const { return kind_; }
  const Instance& inst() const { return inst_; }

  // sign of margin(u_i - u_j)
  int sign(std::size_t i, std::size_t j) {
    ensure_signs();
    return signs_[i * n_ + j];
  }
  bool weak(std::size_t i, std::size_t j) { return sign(i, j) >= 0; }

  const BitMatrix& weak_matrix() {
    if (!weak_) {
      ensure_signs();
      weak_.emplace(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (signs_[i * n_ + j] >= 0) weak_->set(i, j);
        }
      }
    }
    return *weak_;
  }

  const BitMatrix& dominance() {
    if (!dominance_) {
      dominance_.emplace(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (dominates(battery_.utilities[i], battery_.utilities[j])) dominance_->set(i, j);
        }
      }
    }
    return *dominance_;
  }

  // Margin exactly 0 between acts with different utility vectors.
  bool boundary(std::size_t i, std::size_t j) {
    return sign(i, j) == 0 && battery_.utilities[i] != battery_.utilities[j];
  }

  const std::vector<std::size_t>& constants() {
    if (!constants_) constants_ = battery_.constants();
    return *constants_;
  }

  Rational margin(std::size_t i, std::size_t j) const { return evaluator_.margin_pair(i, j); }

 private:
  static bool dominates(const UtilityVector& a, const UtilityVector& b) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (a[s] < b[s]) return false;
    }
    return true;
  }

  void ensure_signs() {
    if (!signs_.empty() || n_ == 0) return;
    signs_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        signs_[i * n_ + j] = static_cast<signed char>(evaluator_.sign_pair(i, j));
      }
    }
  }

  const ModelKind& kind_;
  const Instance& inst_;
  const Battery& battery_;
  std::size_t n_;
  BatteryEvaluator evaluator_;
  std::vector<signed char> signs_;
  std::optional<BitMatrix> weak_;
  std::optional<BitMatrix> dominance_;
  std::optional<std::vector<std::size_t>> constants_;
};

struct Mixture {
  std::int64_t num;
  std::int64_t den;
};

Mixture as_mixture(const Rational& w) { return {w.get_num().get_si(), w.get_den().get_si()}; }

class Recorder {
 public:
  Recorder(AuditReport& report, std::size_t cap) : report_(report), cap_(cap) {}
  // True when a further witness should be materialized.
  bool violation() {
    ++report_.violations;
    report_.passed = false;
    return cap_ == 0 || report_.witnesses.size() < cap_;
  }
  void add(Witness w) { report_.witnesses.push_back(std::move(w)); }

 private:
  AuditReport& report_;
  std::size_t cap_;
};

std::string mix_label(const Rational& w, std::string_view a, std::string_view b) {
  return to_string(w) + " " + std::string(a) + " + " + to_string(1 - w) + " " + std::string(b);
}

Witness pair_witness(Context& ctx, std::size_t f, std::size_t g) {
  Witness w;
  w.acts = {f, g};
  w.judgments = {{"f >= g", ctx.margin(f, g)}, {"g >= f", ctx.margin(g, f)}};
  return w;
}

Witness triple_witness(Context& ctx, std::size_t a, std::size_t b, std::size_t c, std::string_view la,
                       std::string_view lb, std::string_view lc) {
  Witness w;
  w.acts = {a, b, c};
  const std::string sa(la), sb(lb), sc(lc);
  w.judgments = {{sa + " >= " + sb, ctx.margin(a, b)},
                 {sb + " >= " + sc, ctx.margin(b, c)},
                 {sa + " >= " + sc, ctx.margin(a, c)}};
  return w;
}

void audit_nontriviality(Context& ctx, AuditReport& r, Recorder&) {
  const std::size_t n = ctx.size();
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked;
      if (ctx.boundary(i, j)) ++r.boundary_flags;
      if (!found && ctx.sign(i, j) >= 0 && ctx.sign(j, i) < 0) found = true;
    }
  }
  if (!found) {
    r.passed = false;
    r.violations = 1;
    Witness w;
    w.note = "no strictly preferred pair on the battery";
    r.witnesses.push_back(std::move(w));
  }
}

void audit_reflexivity(Context& ctx, AuditReport& r, Recorder& rec) {
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    ++r.checked;
    if (ctx.sign(i, i) < 0 && rec.violation()) {
      Witness w;
      w.acts = {i};
      w.judgments = {{"f >= f", ctx.margin(i, i)}};
      rec.add(std::move(w));
    }
  }
}

void audit_unambiguous_completeness(Context& ctx, AuditReport& r, Recorder& rec) {
  const auto& c = ctx.constants();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      ++r.checked;
      const std::size_t x = c[a], y = c[b];
      r.boundary_flags += ctx.boundary(x, y) + ctx.boundary(y, x);
      if (!ctx.weak(x, y) && !ctx.weak(y, x) && rec.violation()) rec.add(pair_witness(ctx, x, y));
    }
  }
}

void count_boundary_pairs(Context& ctx, AuditReport& r) {
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    for (std::size_t j = 0; j < ctx.size(); ++j) {
      if (ctx.boundary(i, j)) ++r.boundary_flags;
    }
  }
}

void audit_unambiguous_transitivity(Context& ctx, AuditReport& r, Recorder& rec) {
  const std::size_t n = ctx.size();
  const BitMatrix& weak = ctx.weak_matrix();
  const BitMatrix& dom = ctx.dominance();
  r.checked = 2 * n * n * n;
  count_boundary_pairs(ctx, r);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      // (i) f dominates g, g >= h; (ii) f >= g, g dominates h.
      for (int clause = 1; clause <= 2; ++clause) {
        const bool premise = clause == 1 ? dom.test(f, g) : weak.test(f, g);
        if (!premise) continue;
        const std::uint64_t* second = clause == 1 ? weak.row(g) : dom.row(g);
        for_each_and_not(second, weak.row(f), weak.words(), [&](std::size_t h) {
          if (!rec.violation()) return;
          Witness w;
          w.acts = {f, g, h};
          w.clause = clause;
          w.judgments = {{"f >= g", ctx.margin(f, g)}, {"g >= h", ctx.margin(g, h)}, {"f >= h", ctx.margin(f, h)}};
          w.note = clause == 1 ? "f statewise dominates g" : "g statewise dominates h";
          rec.add(std::move(w));
        });
      }
    }
  }
}

void audit_monotonicity(Context& ctx, AuditReport& r, Recorder& rec) {
  const BitMatrix& dom = ctx.dominance();
  for (std::size_t f = 0; f < ctx.size(); ++f) {
    for (std::size_t g = 0; g < ctx.size(); ++g) {
      if (!dom.test(f, g)) continue;
      ++r.checked;
      if (ctx.boundary(f, g)) ++r.boundary_flags;
      if (!ctx.weak(f, g) && rec.violation()) {
        Witness w;
        w.acts = {f, g};
        w.judgments = {{"f >= g", ctx.margin(f, g)}};
        w.note = "f statewise dominates g";
        rec.add(std::move(w));
      }
    }
  }
}

Rational rational_margin(const Context& ctx, const UtilityVector& phi) {
  return model_margin(ctx.kind(), ctx.inst().collection, phi);
}

void audit_independence(Context& ctx, AuditReport& r, Recorder& rec, const AuditOptions& options) {
  const std::size_t n = ctx.size();
  const auto& u = ctx.battery().utilities;
  // Structural part: sign of margin(alpha * phi) against margin(phi) on every
  // distinct difference vector, attributed to its first pair (f, g) with h = g.
  std::set<UtilityVector> seen;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      UtilityVector phi = u[f] - u[g];
      if (!seen.insert(phi).second) continue;
      const Rational base = rational_margin(ctx, phi);
      for (const auto& alpha : options.weights) {
        ++r.checked;
        const Rational scaled = rational_margin(ctx, alpha * phi);
        if (sgn(scaled) == 0 && sgn(phi.sup_norm()) != 0) ++r.boundary_flags;
        if ((sgn(base) >= 0) != (sgn(scaled) >= 0) && rec.violation()) {
          Witness w;
          w.acts = {f, g, g};
          w.alpha = alpha;
          w.judgments = {{"f >= g", base}, {mix_label(alpha, "f", "h") + " >= " + mix_label(alpha, "g", "h"), scaled}};
          rec.add(std::move(w));
        }
      }
    }
  }
  // Spot checks on genuinely mixed acts.
  if (options.weights.empty()) return;
  const auto& acts = ctx.battery().acts;
  const auto& util = ctx.inst().utility;
  for (std::size_t k = 0; k < options.spot_checks; ++k) {
    const std::size_t f = k % n;
    const std::size_t g = (7 * k + 3) % n;
    const std::size_t h = (13 * k + 5) % n;
    const Rational& alpha = options.weights[k % options.weights.size()];
    ++r.checked;
    const Rational base = rational_margin(ctx, u[f] - u[g]);
    const UtilityVector left = utility_vector(util, mix_acts(alpha, acts[f], acts[h]));
    const UtilityVector right = utility_vector(util, mix_acts(alpha, acts[g], acts[h]));
    const Rational mixed = rational_margin(ctx, left - right);
    if (sgn(mixed) == 0 && left != right) ++r.boundary_flags;
    if ((sgn(base) >= 0) != (sgn(mixed) >= 0) && rec.violation()) {
      Witness w;
      w.acts = {f, g, h};
      w.alpha = alpha;
      w.judgments = {{"f >= g", base}, {mix_label(alpha, "f", "h") + " >= " + mix_label(alpha, "g", "h"), mixed}};
      rec.add(std::move(w));
    }
  }
}

void audit_completeness(Context& ctx, AuditReport& r, Recorder& rec) {
  for (std::size_t f = 0; f < ctx.size(); ++f) {
    for (std::size_t g = f + 1; g < ctx.size(); ++g) {
      ++r.checked;
      r.boundary_flags += ctx.boundary(f, g) + ctx.boundary(g, f);
      if (!ctx.weak(f, g) && !ctx.weak(g, f) && rec.violation()) rec.add(pair_witness(ctx, f, g));
    }
  }
}

void audit_transitivity(Context& ctx, AuditReport& r, Recorder& rec) {
  const std::size_t n = ctx.size();
  const BitMatrix& weak = ctx.weak_matrix();
  r.checked = n * n * n;
  count_boundary_pairs(ctx, r);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (!weak.test(f, g)) continue;
      for_each_and_not(weak.row(g), weak.row(f), weak.words(), [&](std::size_t h) {
        if (rec.violation()) rec.add(triple_witness(ctx, f, g, h, "f", "g", "h"));
      });
    }
  }
}

// Constant-bound axioms range over (x, f, y) with x, y constant.
template <class Violates>
void audit_constant_bound(Context& ctx, AuditReport& r, Recorder& rec, Violates&& violates) {
  const auto& c = ctx.constants();
  std::vector<bool> is_constant(ctx.size(), false);
  for (std::size_t x : c) is_constant[x] = true;
  for (std::size_t x : c) {
    for (std::size_t f = 0; f < ctx.size(); ++f) {
      r.boundary_flags += ctx.boundary(x, f) + ctx.boundary(f, x);
    }
  }
  for (std::size_t x : c) {
    for (std::size_t f = 0; f < ctx.size(); ++f) {
      for (std::size_t y : c) {
        ++r.checked;
        if (violates(x, f, y) && rec.violation()) rec.add(triple_witness(ctx, x, f, y, "x", "f", "y"));
      }
    }
  }
}

void audit_favorable_mixing(Context& ctx, AuditReport& r, Recorder& rec, const AuditOptions& options) {
  std::vector<Rational> weights = options.weights;
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  std::vector<Mixture> mixes;
  for (const auto& w : weights) mixes.push_back(as_mixture(w));

  const std::size_t n = ctx.size();
  const auto& evaluator = ctx.evaluator();
  const auto& u = ctx.battery().utilities;
  std::vector<int> mixed(mixes.size());
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      // premise g > f
      if (!(ctx.weak(g, f) && !ctx.weak(f, g))) continue;
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t k = 0; k < mixes.size(); ++k) {
          const BatteryEvaluator::Term terms[] = {
              {mixes[k].num, f}, {mixes[k].den - mixes[k].num, h}, {-mixes[k].den, g}};
          mixed[k] = evaluator.sign(terms);
          if (mixed[k] == 0 && weights[k] * u[f] + (1 - weights[k]) * u[h] != u[g]) ++r.boundary_flags;
        }
        for (std::size_t a = 0; a < mixes.size(); ++a) {
          if (mixed[a] < 0) continue;
          for (std::size_t l = 0; l < a; ++l) {
            ++r.checked;
            if (mixed[l] >= 0 || !rec.violation()) continue;
            auto mix_margin = [&](std::size_t k) {
              const BatteryEvaluator::Term terms[] = {
                  {mixes[k].num, f}, {mixes[k].den - mixes[k].num, h}, {-mixes[k].den, g}};
              return evaluator.margin(terms) / mixes[k].den;
            };
            Witness w;
            w.acts = {f, g, h};
            w.alpha = weights[a];
            w.lambda = weights[l];
            w.judgments = {{"g >= f", ctx.margin(g, f)},
                           {"f >= g", ctx.margin(f, g)},
                           {mix_label(weights[a], "f", "h") + " >= g", mix_margin(a)},
                           {mix_label(weights[l], "f", "h") + " >= g", mix_margin(l)}};
            rec.add(std::move(w));
          }
        }
      }
    }
  }
}

void audit_negative_completeness(Context& ctx, AuditReport& r, Recorder& rec) {
  for (std::size_t f = 0; f < ctx.size(); ++f) {
    for (std::size_t g = f + 1; g < ctx.size(); ++g) {
      ++r.checked;
      r.boundary_flags += ctx.boundary(f, g) + ctx.boundary(g, f);
      // both robust: f >=+ g and g >=+ f
      if (ctx.sign(f, g) > 0 && ctx.sign(g, f) > 0 && rec.violation()) rec.add(pair_witness(ctx, f, g));
    }
  }
}

void require_constants(Context& ctx, AxiomKind axiom) {
  if (ctx.constants().empty()) {
    throw Error(ErrorCode::BatteryMissingConstants,
                std::string(to_string(axiom)) + " quantifies over constant acts but the battery has none");
  }
}

AuditReport run(Context& ctx, AxiomKind axiom, const AuditOptions& options) {
  AuditReport r{axiom, ctx.kind(), ctx.battery().description, ctx.size(), true, 0, 0, {}, 0};
  Recorder rec(r, options.max_witnesses);
  if (needs_constants(axiom)) require_constants(ctx, axiom);
  switch (axiom) {
    case AxiomKind::NonTriviality: audit_nontriviality(ctx, r, rec); break;
    case AxiomKind::Reflexivity: audit_reflexivity(ctx, r, rec); break;
    case AxiomKind::UnambiguousCompleteness: audit_unambiguous_completeness(ctx, r, rec); break;
    case AxiomKind::UnambiguousTransitivity: audit_unambiguous_transitivity(ctx, r, rec); break;
    case AxiomKind::Monotonicity: audit_monotonicity(ctx, r, rec); break;
    case AxiomKind::Independence: audit_independence(ctx, r, rec, options); break;
    case AxiomKind::Completeness: audit_completeness(ctx, r, rec); break;
    case AxiomKind::Transitivity: audit_transitivity(ctx, r, rec); break;
    case AxiomKind::ConstantBoundTransitivity:
      audit_constant_bound(ctx, r, rec, [&](std::size_t x, std::size_t f, std::size_t y) {
        return ctx.weak(x, f) && ctx.weak(f, y) && !ctx.weak(x, y);
      });
      break;
    case AxiomKind::FavorableMixing: audit_favorable_mixing(ctx, r, rec, options); break;
    case AxiomKind::NegativeCompleteness: audit_negative_completeness(ctx, r, rec); break;
    case AxiomKind::NegativeConstantBoundTransitivity:
      audit_constant_bound(ctx, r, rec, [&](std::size_t x, std::size_t f, std::size_t y) {
        return !ctx.weak(x, f) && !ctx.weak(f, y) && ctx.weak(x, y);
      });
      break;
  }
  return r;
}

}  // namespace

const std::vector<AxiomKind>& all_axioms() {
  static const std::vector<AxiomKind> axioms = [] {
    std::vector<AxiomKind> out;
    for (const auto& entry : kNames) out.push_back(entry.kind);
    return out;
  }();
  return axioms;
}

std::string_view to_string(AxiomKind axiom) noexcept {
  for (const auto& entry : kNames) {
    if (entry.kind == axiom) return entry.name;
  }
  return "unknown";
}

AxiomKind parse_axiom(std::string_view name) {
  if (name == "cbt") return AxiomKind::ConstantBoundTransitivity;
  if (name == "ncbt") return AxiomKind::NegativeConstantBoundTransitivity;
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.kind;
  }
  throw Error(ErrorCode::UnknownAxiom, "unknown axiom '" + std::string(name) + "'");
}

bool needs_constants(AxiomKind axiom) noexcept {
  return axiom == AxiomKind::UnambiguousCompleteness || axiom == AxiomKind::ConstantBoundTransitivity ||
         axiom == AxiomKind::NegativeConstantBoundTransitivity;
}

AuditReport audit(AxiomKind axiom, const ModelKind& kind, const Instance& inst, const Battery& battery,
                  const AuditOptions& options) {
  check_model(kind, inst.collection);
  Context ctx(kind, inst, battery);
  return run(ctx, axiom, options);
}

std::vector<AuditReport> audit_suite(const ModelKind& kind, const Instance& inst, const Battery& battery,
                                     const AuditOptions& options) {
  check_model(kind, inst.collection);
  Context ctx(kind, inst, battery);
  std::vector<AuditReport> out;
  for (AxiomKind axiom : all_axioms()) {
    if (needs_constants(axiom) && ctx.constants().empty()) continue;
    out.push_back(run(ctx, axiom, options));
  }
  return out;
}

namespace {

class Replayer {
 public:
  Replayer(const AuditReport& report, const Instance& inst, const Battery& battery)
      : kind_(report.model), inst_(inst), battery_(battery) {}

  UtilityVector u(std::size_t i) const { return utility_vector(inst_.utility, battery_.acts.at(i)); }

  Rational margin(const UtilityVector& a, const UtilityVector& b) const {
    return model_margin(kind_, inst_.collection, a - b);
  }
  Rational margin(std::size_t i, std::size_t j) const { return margin(u(i), u(j)); }

  UtilityVector mix(const Rational& w, std::size_t a, std::size_t b) const {
    return utility_vector(inst_.utility, mix_acts(w, battery_.acts.at(a), battery_.acts.at(b)));
  }

  bool constant(std::size_t i) const { return battery_.acts.at(i).is_constant(); }

  const ModelKind& kind_;
  const Instance& inst_;
  const Battery& battery_;
};

bool same_margins(const Witness& w, const std::vector<Rational>& margins) {
  if (w.judgments.size() != margins.size()) return false;
  for (std::size_t k = 0; k < margins.size(); ++k) {
    if (w.judgments[k].margin != margins[k]) return false;
  }
  return true;
}

bool nonneg(const Rational& m) { return sgn(m) >= 0; }

}  // namespace

bool replay(const AuditReport& report, const Instance& inst, const Battery& battery, const Witness& witness) {
  const Replayer rp(report, inst, battery);
  const auto& a = witness.acts;
  for (std::size_t i : a) {
    if (i >= battery.size()) return false;
  }
  auto arity = [&](std::size_t k) { return a.size() == k; };

  switch (report.axiom) {
    case AxiomKind::NonTriviality: {
      if (!arity(0)) return false;
      for (std::size_t i = 0; i < battery.size(); ++i) {
        for (std::size_t j = 0; j < battery.size(); ++j) {
          if (nonneg(rp.margin(i, j)) && !nonneg(rp.margin(j, i))) return false;
        }
      }
      return true;
    }
    case AxiomKind::Reflexivity: {
      if (!arity(1)) return false;
      const Rational m = rp.margin(a[0], a[0]);
      return !nonneg(m) && same_margins(witness, {m});
    }
    case AxiomKind::UnambiguousCompleteness:
    case AxiomKind::Completeness: {
      if (!arity(2)) return false;
      if (report.axiom == AxiomKind::UnambiguousCompleteness && !(rp.constant(a[0]) && rp.constant(a[1]))) {
        return false;
      }
      const Rational fg = rp.margin(a[0], a[1]);
      const Rational gf = rp.margin(a[1], a[0]);
      return !nonneg(fg) && !nonneg(gf) && same_margins(witness, {fg, gf});
    }
    case AxiomKind::NegativeCompleteness: {
      if (!arity(2)) return false;
      const Rational fg = rp.margin(a[0], a[1]);
      const Rational gf = rp.margin(a[1], a[0]);
      return sgn(fg) > 0 && sgn(gf) > 0 && same_margins(witness, {fg, gf});
    }
    case AxiomKind::UnambiguousTransitivity: {
      if (!arity(3)) return false;
      const Rational fg = rp.margin(a[0], a[1]);
      const Rational gh = rp.margin(a[1], a[2]);
      const Rational fh = rp.margin(a[0], a[2]);
      bool premise = false;
      if (witness.clause == 1) {
        premise = statewise_dominates(inst.utility, battery.acts[a[0]], battery.acts[a[1]]) && nonneg(gh);
      } else if (witness.clause == 2) {
        premise = nonneg(fg) && statewise_dominates(inst.utility, battery.acts[a[1]], battery.acts[a[2]]);
      }
      return premise && !nonneg(fh) && same_margins(witness, {fg, gh, fh});
    }
    case AxiomKind::Monotonicity: {
      if (!arity(2)) return false;
      const Rational fg = rp.margin(a[0], a[1]);
      return statewise_dominates(inst.utility, battery.acts[a[0]], battery.acts[a[1]]) && !nonneg(fg) &&
             same_margins(witness, {fg});
    }
    case AxiomKind::Independence: {
      if (!arity(3) || !witness.alpha) return false;
      const Rational base = rp.margin(a[0], a[1]);
      const Rational mixed = rp.margin(rp.mix(*witness.alpha, a[0], a[2]), rp.mix(*witness.alpha, a[1], a[2]));
      return nonneg(base) != nonneg(mixed) && same_margins(witness, {base, mixed});
    }
    case AxiomKind::Transitivity:
    case AxiomKind::ConstantBoundTransitivity:
    case AxiomKind::NegativeConstantBoundTransitivity: {
      if (!arity(3)) return false;
      const Rational ab = rp.margin(a[0], a[1]);
      const Rational bc = rp.margin(a[1], a[2]);
      const Rational ac = rp.margin(a[0], a[2]);
      bool violated = false;
      if (report.axiom == AxiomKind::Transitivity) {
        violated = nonneg(ab) && nonneg(bc) && !nonneg(ac);
      } else {
        if (!rp.constant(a[0]) || !rp.constant(a[2])) return false;
        violated = report.axiom == AxiomKind::ConstantBoundTransitivity ? nonneg(ab) && nonneg(bc) && !nonneg(ac)
                                                                         : !nonneg(ab) && !nonneg(bc) && nonneg(ac);
      }
      return violated && same_margins(witness, {ab, bc, ac});
    }
    case AxiomKind::FavorableMixing: {
      if (!arity(3) || !witness.alpha || !witness.lambda) return false;
      const Rational& alpha = *witness.alpha;
      const Rational& lambda = *witness.lambda;
      if (!(sgn(lambda) > 0 && lambda <= alpha && alpha < 1)) return false;
      const Rational gf = rp.margin(a[1], a[0]);
      const Rational fg = rp.margin(a[0], a[1]);
      const UtilityVector ug = rp.u(a[1]);
      const Rational am = rp.margin(rp.mix(alpha, a[0], a[2]), ug);
      const Rational lm = rp.margin(rp.mix(lambda, a[0], a[2]), ug);
      return nonneg(gf) && !nonneg(fg) && nonneg(am) && !nonneg(lm) && same_margins(witness, {gf, fg, am, lm});
    }
  }
  return false;
}

}  // namespace ambipref

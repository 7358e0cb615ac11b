#include "ambipref/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace ambipref {

namespace {

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = engine_.max() - engine_.max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> simplex_point(Stream& rng, std::size_t dim, std::int64_t denominator_bound) {
  const std::int64_t q = rng.between(1, denominator_bound);
  std::vector<std::int64_t> units(dim, 0);
  std::int64_t remaining = q;
  for (std::size_t s = 0; s + 1 < dim; ++s) {
    units[s] = rng.between(0, remaining);
    remaining -= units[s];
  }
  units[dim - 1] = remaining;
  rng.shuffle(units);
  std::vector<Rational> out;
  out.reserve(dim);
  for (auto u : units) out.emplace_back(ratio(static_cast<long>(u), static_cast<long>(q)));
  return out;
}

Lottery random_lottery(Stream& rng, std::int64_t denominator_bound) {
  return Lottery::make(simplex_point(rng, 2, denominator_bound));
}

}  // namespace

void check_params(const GenParams& p) {
  auto in = [](auto v, auto lo, auto hi) { return v >= lo && v <= hi; };
  if (!in(p.num_states, 1U, 4U) || !in(p.num_sets, 1U, 4U) || !in(p.vertices_per_set, 1U, 6U) ||
      !in(p.denominator_bound, 1, 1'000'000)) {
    throw Error(ErrorCode::ParamsOutOfRange,
                "generator parameters out of range (states 1..4, sets 1..4, vertices 1..6, denominator 1..1000000)");
  }
}

Instance generate_instance(std::uint64_t seed, const GenParams& params) {
  check_params(params);
  Stream rng(seed);
  const auto lo_states = static_cast<std::int64_t>(std::min<std::size_t>(2, params.num_states));
  const auto num_states =
      static_cast<std::size_t>(rng.between(lo_states, static_cast<std::int64_t>(params.num_states)));
  const auto num_sets = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(params.num_sets)));

  std::vector<std::string> state_labels;
  for (std::size_t s = 0; s < num_states; ++s) state_labels.push_back("s" + std::to_string(s + 1));

  std::vector<BeliefSet> sets;
  for (std::size_t i = 0; i < num_sets; ++i) {
    const auto wanted =
        static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(params.vertices_per_set)));
    std::vector<Prior> vertices;
    // duplicates are redrawn; small denominator bounds may not admit `wanted` distinct points
    for (std::size_t attempts = 0; vertices.size() < wanted && attempts < 64 * wanted; ++attempts) {
      Prior p = Prior::make(simplex_point(rng, num_states, params.denominator_bound));
      if (std::find(vertices.begin(), vertices.end(), p) == vertices.end()) vertices.push_back(std::move(p));
    }
    sets.push_back(BeliefSet::make("P" + std::to_string(i + 1), std::move(vertices)));
  }

  std::vector<NamedAct> acts;
  for (const char* name : {"f", "g"}) {
    std::vector<Lottery> by_state;
    for (std::size_t s = 0; s < num_states; ++s) by_state.push_back(random_lottery(rng, params.denominator_bound));
    acts.push_back({name, Act::make(std::move(by_state))});
  }

  return Instance::make(StateSpace::make(std::move(state_labels)), PrizeSet::make({"z0", "z1"}),
                        UtilityFunction::make({Rational(0), Rational(1)}), BeliefCollection::make(std::move(sets)),
                        std::move(acts));
}

}  // namespace ambipref

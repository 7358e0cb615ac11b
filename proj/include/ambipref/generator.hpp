#pragma once

// Seeded random instances. Everything is drawn from one mt19937_64 stream
// with rejection-sampled integer draws, so output is identical across
// platforms and standard libraries.

#include <cstdint>

#include "ambipref/model.hpp"

namespace ambipref {

/// Counts are upper bounds: each instance draws |S| from [min(2, num_states),
/// num_states], the number of sets from [1, num_sets] and each set's vertex
/// count from [1, vertices_per_set].
struct GenParams {
  std::size_t num_states = 3;        // 1..4
  std::size_t num_sets = 3;          // 1..4
  std::size_t vertices_per_set = 3;  // 1..6
  std::int64_t denominator_bound = 10;  // 1..1000000
};

/// Throws ParamsOutOfRange.
void check_params(const GenParams& params);

/// Two prizes z0, z1 with utilities 0 and 1, states s1..sn, sets P1..Pk
/// with stick-breaking priors whose denominators divide a draw from
/// [1, denominator_bound], and two random acts f and g.
Instance generate_instance(std::uint64_t seed, const GenParams& params = {});

}  // namespace ambipref

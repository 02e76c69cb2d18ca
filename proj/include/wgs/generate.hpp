#ifndef WGS_GENERATE_HPP_
#define WGS_GENERATE_HPP_

#include <cstdint>

#include "wgs/types.hpp"

namespace wgs {

// Deterministic test-instance generator: a uniformly random self-map, and
// weights that are zero with the given probability and otherwise have
// modulus uniform in [0.1, 2] with uniform phase. The same (n, seed,
// zero_weight_probability) always yields the same operator.
WeightedShift random_operator(std::size_t n, std::uint64_t seed,
                              double zero_weight_probability);

// Deterministic vector with coordinates uniform in the complex box
// [-1, 1] x [-1, 1].
Vector random_vector(std::size_t n, std::uint64_t seed);

}  // namespace wgs

#endif  // WGS_GENERATE_HPP_

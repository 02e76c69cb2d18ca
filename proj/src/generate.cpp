#include "wgs/generate.hpp"

#include <string>

#include "wgs/rng.hpp"

namespace wgs {

WeightedShift random_operator(std::size_t n, std::uint64_t seed,
                              double zero_weight_probability) {
  if (n == 0) {
    throw ValidationError("random_operator: dimension must be positive");
  }
  if (!(zero_weight_probability >= 0.0 && zero_weight_probability <= 1.0)) {
    throw DomainError("random_operator: zero weight probability " +
                      std::to_string(zero_weight_probability) +
                      " is outside [0, 1]");
  }
  std::mt19937_64 gen(seed);
  std::vector<std::size_t> image(n);
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    image[alpha] = rng::pick_index(gen, n);
  }
  std::vector<Complex> weights(n);
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    if (rng::uniform01(gen) < zero_weight_probability) {
      weights[alpha] = Complex{};
    } else {
      weights[alpha] = rng::annulus(gen, 0.1, 2.0);
    }
  }
  return WeightedShift(IndexMap(std::move(image)),
                       WeightVector(std::move(weights)));
}

Vector random_vector(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw ValidationError("random_vector: dimension must be positive");
  }
  std::mt19937_64 gen(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  std::vector<Complex> coords(n);
  for (Complex& z : coords) z = rng::box(gen);
  return Vector(std::move(coords));
}

}  // namespace wgs

#ifndef WGS_RNG_HPP_
#define WGS_RNG_HPP_

// Small deterministic sampling helpers on top of std::mt19937_64. The
// standard distributions are avoided on purpose: their output is not pinned
// by the standard, and reproducibility across toolchains matters more here
// than perfect uniformity in the last bit.

#include <cstdint>
#include <random>

#include "wgs/scalars.hpp"

namespace wgs::rng {

inline double uniform01(std::mt19937_64& gen) {
  return double(gen() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

// Uniform index in [0, n); n must be positive. The modulo bias is far below
// anything these sampling routines are used to decide.
inline std::size_t pick_index(std::mt19937_64& gen, std::size_t n) {
  return static_cast<std::size_t>(gen() % n);
}

inline Complex unit_phase(std::mt19937_64& gen) {
  const double angle = uniform(gen, 0.0, 6.283185307179586476925286766559);
  return Complex{std::cos(angle), std::sin(angle)};
}

// Modulus uniform in [rmin, rmax], phase uniform.
inline Complex annulus(std::mt19937_64& gen, double rmin, double rmax) {
  return uniform(gen, rmin, rmax) * unit_phase(gen);
}

// Real and imaginary parts uniform in [-1, 1].
inline Complex box(std::mt19937_64& gen) {
  return Complex{uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)};
}

}  // namespace wgs::rng

#endif  // WGS_RNG_HPP_

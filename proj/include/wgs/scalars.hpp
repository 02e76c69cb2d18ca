#ifndef WGS_SCALARS_HPP_
#define WGS_SCALARS_HPP_

#include <cmath>
#include <complex>

namespace wgs {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Closeness policy used whenever two floating-point quantities are compared
// for equality: a and b agree when |a - b| <= atol + rtol * max(|a|, |b|).
struct Tolerance {
  double atol = 1e-12;
  double rtol = 1e-9;

  bool close(double a, double b) const {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
  }
  bool close(Complex a, Complex b) const {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
  }
  bool is_zero(Complex a) const { return close(a, Complex{}); }
};

inline const Tolerance& default_tolerance() {
  static const Tolerance tol{};
  return tol;
}

}  // namespace wgs

#endif  // WGS_SCALARS_HPP_

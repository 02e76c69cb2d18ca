#include "wgs/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace wgs {

double fiber_norm(const WeightedShift& op) {
  const std::size_t n = op.dim();
  const auto& image = op.map().image();
  const auto& weights = op.weights().entries();
  std::vector<double> mass(n, 0.0);
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    mass[image[alpha]] += std::norm(weights[alpha]);
  }
  double best = 0.0;
  for (double m : mass) best = std::max(best, m);
  return std::sqrt(best);
}

std::size_t max_fiber_cardinality(const IndexMap& map) {
  std::vector<std::size_t> count(map.dim(), 0);
  for (std::size_t value : map.image()) ++count[value];
  return *std::max_element(count.begin(), count.end());
}

bool is_self_adjoint(const WeightedShift& op, const Tolerance& tol) {
  const auto& image = op.map().image();
  const auto& weights = op.weights().entries();
  for (std::size_t theta = 0; theta < op.dim(); ++theta) {
    if (image[image[theta]] == theta) {
      if (!tol.close(weights[theta], std::conj(weights[image[theta]]))) {
        return false;
      }
    } else if (!tol.is_zero(weights[theta])) {
      return false;
    }
  }
  return true;
}

bool is_invertible(const WeightedShift& op) {
  if (!op.map().is_bijective()) return false;
  for (const Complex& w : op.weights().entries()) {
    if (w == Complex{}) return false;
  }
  return true;
}

bool is_unitary(const WeightedShift& op, const Tolerance& tol) {
  if (!op.map().is_bijective()) return false;
  for (const Complex& w : op.weights().entries()) {
    if (!tol.close(std::abs(w), 1.0)) return false;
  }
  return true;
}

bool is_isometry(const WeightedShift& op, const Tolerance& tol) {
  return is_unitary(op, tol);
}

std::optional<double> weight_reciprocal_bound(const WeightedShift& op) {
  std::optional<double> bound;
  for (const Complex& w : op.weights().entries()) {
    if (w == Complex{}) continue;
    const double r = std::abs(w);
    const double value = r + 1.0 / r;
    if (!bound || value > *bound) bound = value;
  }
  return bound;
}

ClassificationReport classify(const WeightedShift& op, const Tolerance& tol) {
  ClassificationReport report;
  report.n = op.dim();
  report.norm = fiber_norm(op);
  report.max_fiber_cardinality = max_fiber_cardinality(op.map());
  report.self_adjoint = is_self_adjoint(op, tol);
  report.invertible = is_invertible(op);
  report.isometry = is_isometry(op, tol);
  report.unitary = is_unitary(op, tol);
  const bool all_nonzero =
      std::none_of(op.weights().entries().begin(), op.weights().entries().end(),
                   [](const Complex& w) { return w == Complex{}; });
  if (all_nonzero) report.invertibility_bound = weight_reciprocal_bound(op);
  return report;
}

}  // namespace wgs

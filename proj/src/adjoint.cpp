#include "wgs/adjoint.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "wgs/analysis.hpp"

namespace wgs {

std::size_t FiberTable::max_nonzero() const {
  std::size_t best = 0;
  for (const auto& fiber : nonzero_fibers) {
    if (fiber.size() > best) best = fiber.size();
  }
  return best;
}

FiberTable build_fibers(const WeightedShift& op) {
  const std::size_t n = op.dim();
  FiberTable table;
  table.dim = n;
  table.fibers.assign(n, {});
  table.nonzero_fibers.assign(n, {});
  const auto& image = op.map().image();
  const auto& weights = op.weights().entries();
  // alpha runs ascending, so every fiber comes out sorted.
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    const std::size_t b = image[alpha];
    table.fibers[b].push_back(alpha);
    if (weights[alpha] != Complex{}) table.nonzero_fibers[b].push_back(alpha);
  }
  return table;
}

AdjointDecomposition adjoint_decompose(const WeightedShift& op) {
  const FiberTable table = build_fibers(op);
  const std::size_t n = op.dim();
  const std::size_t depth = table.max_nonzero();
  const auto& weights = op.weights().entries();

  AdjointDecomposition out;
  out.dim = n;
  out.anchor = 0;
  out.fiber_counts.reserve(n);
  for (const auto& fiber : table.nonzero_fibers) {
    out.fiber_counts.push_back(fiber.size());
  }
  out.source_norm = fiber_norm(op);

  out.terms.reserve(depth);
  for (std::size_t i = 1; i <= depth; ++i) {
    std::vector<std::size_t> image(n, out.anchor);
    std::vector<Complex> conjugated(n);
    for (std::size_t b = 0; b < n; ++b) {
      const auto& live = table.nonzero_fibers[b];
      if (i <= live.size()) {
        const std::size_t source = live[i - 1];
        image[b] = source;
        conjugated[b] = std::conj(weights[source]);
      }
      // Exhausted fibers stay parked on the anchor with weight zero.
    }
    out.terms.emplace_back(IndexMap(std::move(image)),
                           WeightVector(std::move(conjugated)));
  }
  return out;
}

ShiftSum AdjointDecomposition::as_sum() const {
  if (terms.empty()) {
    return ShiftSum({WeightedShift::zero(dim)});
  }
  return ShiftSum(terms);
}

std::size_t min_term_count(const WeightedShift& op) {
  return build_fibers(op).max_nonzero();
}

std::size_t term_bound_from_separation(double norm_bound, double separation) {
  if (!(norm_bound >= 0.0)) {
    throw DomainError("term_bound_from_separation: norm bound must be "
                      "nonnegative, got " +
                      std::to_string(norm_bound));
  }
  if (!(separation > 0.0)) {
    throw DomainError("term_bound_from_separation: separation must be "
                      "positive, got " +
                      std::to_string(separation));
  }
  const double ratio = norm_bound / separation;
  const double squared = ratio * ratio;
  if (squared >= 9.0e18) {
    throw DomainError("term_bound_from_separation: bound overflows");
  }
  return static_cast<std::size_t>(std::floor(squared)) + 2;
}

std::vector<WeightedShift> adjoint_of_sum(const ShiftSum& sum) {
  std::vector<WeightedShift> out;
  for (const WeightedShift& term : sum.terms()) {
    AdjointDecomposition d = adjoint_decompose(term);
    for (WeightedShift& adjoint_term : d.terms) {
      out.push_back(std::move(adjoint_term));
    }
  }
  return out;
}

}  // namespace wgs

#ifndef WGS_ANALYSIS_HPP_
#define WGS_ANALYSIS_HPP_

// Structural predicates and norms computed directly from the index map and
// the weights, without densifying. Each has a dense counterpart in
// dense.hpp that the tests play against it.

#include <cstddef>
#include <optional>

#include "wgs/types.hpp"

namespace wgs {

// Operator norm via the fiber formula: the norm of a weighted generalized
// shift is the largest l2 mass any single coordinate's preimage carries,
// max_b sqrt(sum of |w[a]|^2 over map(a) = b).
double fiber_norm(const WeightedShift& op);

std::size_t max_fiber_cardinality(const IndexMap& map);

// Self-adjointness is a pointwise condition: every index theta must either
// sit on a 2-periodic orbit with w[theta] = conj(w[map(theta)]), or carry
// weight zero.
bool is_self_adjoint(const WeightedShift& op,
                     const Tolerance& tol = default_tolerance());

// Invertible exactly when the index map is bijective and no weight
// vanishes. Weight comparisons here are exact: any nonzero weight has a
// finite reciprocal, so there is no tolerance question to settle.
bool is_invertible(const WeightedShift& op);

// Bijective index map with unimodular weights. At finite dimension an
// isometric weighted shift is automatically unitary, so the two predicates
// coincide and is_isometry simply forwards.
bool is_unitary(const WeightedShift& op,
                const Tolerance& tol = default_tolerance());
bool is_isometry(const WeightedShift& op,
                 const Tolerance& tol = default_tolerance());

// sup of |w| + 1/|w| over the nonzero weights; empty when every weight is
// zero. A bound on the norm of the inverse plus the operator itself when
// the operator is invertible, and a divergence witness otherwise.
std::optional<double> weight_reciprocal_bound(const WeightedShift& op);

struct ClassificationReport {
  std::size_t n = 0;
  double norm = 0.0;
  std::size_t max_fiber_cardinality = 0;
  bool self_adjoint = false;
  bool invertible = false;
  bool isometry = false;
  bool unitary = false;
  // Present exactly when every weight is nonzero.
  std::optional<double> invertibility_bound;
};

ClassificationReport classify(const WeightedShift& op,
                              const Tolerance& tol = default_tolerance());

}  // namespace wgs

#endif  // WGS_ANALYSIS_HPP_

#ifndef WGS_ADJOINT_HPP_
#define WGS_ADJOINT_HPP_

// Constructive adjoints. The conjugate transpose of a weighted generalized
// shift is itself a finite sum of weighted shifts: coordinate b of the
// adjoint image reads from the entries of b's preimage fiber, and slicing
// the fibers by depth (first nonzero entry of every fiber, second nonzero
// entry, ...) yields one well-formed weighted shift per depth level.

#include <cstddef>
#include <vector>

#include "wgs/types.hpp"

namespace wgs {

struct FiberTable {
  std::size_t dim = 0;
  // fibers[b] lists the preimage of b in ascending order; nonzero_fibers[b]
  // keeps only the entries whose weight is nonzero (exactly zero weights are
  // dropped, no tolerance is involved).
  std::vector<std::vector<std::size_t>> fibers;
  std::vector<std::vector<std::size_t>> nonzero_fibers;

  std::size_t max_nonzero() const;
};

FiberTable build_fibers(const WeightedShift& op);

struct AdjointDecomposition {
  std::size_t dim = 0;
  std::vector<WeightedShift> terms;
  // Every term's map is total, so coordinates whose fiber ran out of
  // entries at a given depth are parked on this anchor index with weight
  // zero. Padded slots therefore never contribute to the sum.
  std::size_t anchor = 0;
  // Per-coordinate nonzero fiber sizes |C_b|; term i (1-based) has a live
  // entry at b exactly when i <= fiber_counts[b].
  std::vector<std::size_t> fiber_counts;
  // Fiber norm of the decomposed operator; each term's norm is bounded by
  // the largest weight modulus, which this dominates.
  double source_norm = 0.0;

  // First depth (1-based) at which coordinate b is padded.
  std::size_t padding_start(std::size_t b) const { return fiber_counts[b] + 1; }

  // The terms as a summable value; the zero operator when there are none.
  ShiftSum as_sum() const;
};

AdjointDecomposition adjoint_decompose(const WeightedShift& op);

// Number of terms the decomposition produces: the largest nonzero fiber
// size. Zero exactly when the operator is zero; one when the map is
// injective and some weight is nonzero.
std::size_t min_term_count(const WeightedShift& op);

// Upper bound on the term count for an operator of norm at most norm_bound
// whose nonzero weights all have modulus at least separation:
// floor((norm_bound / separation)^2) + 2, strictly above any attainable
// nonzero fiber size.
std::size_t term_bound_from_separation(double norm_bound, double separation);

// Adjoint of a sum: concatenation of the per-term decompositions, in term
// order.
std::vector<WeightedShift> adjoint_of_sum(const ShiftSum& sum);

}  // namespace wgs

#endif  // WGS_ADJOINT_HPP_

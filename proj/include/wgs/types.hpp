#ifndef WGS_TYPES_HPP_
#define WGS_TYPES_HPP_

// Value types for weighted generalized shift operators on the complex
// sequence space over {0..n-1}. Such an operator is determined by a total
// self-map of the index set together with one complex weight per coordinate;
// it sends a vector x to (w[a] * x[map(a)])_a. Every type below is immutable
// after construction and validates its invariants eagerly, so a constructed
// value is always well formed.

#include <cstddef>
#include <vector>

#include "wgs/errors.hpp"
#include "wgs/scalars.hpp"

namespace wgs {

// Total self-map of {0..n-1}, stored as its image list.
class IndexMap {
 public:
  explicit IndexMap(std::vector<std::size_t> image);

  static IndexMap identity(std::size_t n);
  static IndexMap constant(std::size_t n, std::size_t target);

  std::size_t dim() const { return image_.size(); }
  std::size_t operator()(std::size_t alpha) const { return image_[alpha]; }
  const std::vector<std::size_t>& image() const { return image_; }

  // Number of distinct values the map attains.
  std::size_t image_size() const;
  bool is_injective() const;
  // A self-map of a finite set is bijective exactly when it is injective.
  bool is_bijective() const { return is_injective(); }

  bool operator==(const IndexMap&) const = default;

 private:
  std::vector<std::size_t> image_;
};

// One finite complex weight per coordinate.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Complex> entries);

  static WeightVector ones(std::size_t n);
  static WeightVector zeros(std::size_t n);

  std::size_t dim() const { return entries_.size(); }
  Complex operator[](std::size_t alpha) const { return entries_[alpha]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::vector<Complex> entries_;
};

// Element of the complex sequence space over {0..n-1}.
class Vector {
 public:
  explicit Vector(std::vector<Complex> coords);

  static Vector zero(std::size_t n);

  std::size_t dim() const { return coords_.size(); }
  Complex operator[](std::size_t alpha) const { return coords_[alpha]; }
  const std::vector<Complex>& coords() const { return coords_; }
  double norm() const;

 private:
  std::vector<Complex> coords_;
};

class WeightedShift {
 public:
  // The map and the weights must share one dimension.
  WeightedShift(IndexMap map, WeightVector weights);

  // Canonical zero operator: identity map, all weights zero.
  static WeightedShift zero(std::size_t n);

  std::size_t dim() const { return map_.dim(); }
  const IndexMap& map() const { return map_; }
  const WeightVector& weights() const { return weights_; }

 private:
  IndexMap map_;
  WeightVector weights_;
};

// Nonempty formal sum of weighted shifts acting on one common dimension.
class ShiftSum {
 public:
  explicit ShiftSum(std::vector<WeightedShift> terms);

  std::size_t dim() const { return terms_.front().dim(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<WeightedShift>& terms() const { return terms_; }

 private:
  std::vector<WeightedShift> terms_;
};

Vector basis_vector(std::size_t n, std::size_t theta);

// <x, y> = sum_a x[a] * conj(y[a]); linear in x, conjugate-linear in y.
Complex inner_product(const Vector& x, const Vector& y);

Vector apply(const WeightedShift& op, const Vector& x);
Vector apply(const ShiftSum& sum, const Vector& x);

}  // namespace wgs

#endif  // WGS_TYPES_HPP_

#include "wgs/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace wgs {

namespace {

void require_positive_dim(std::size_t n, const char* what) {
  if (n == 0) {
    throw ValidationError(std::string(what) + " must have positive dimension");
  }
}

}  // namespace

IndexMap::IndexMap(std::vector<std::size_t> image) : image_(std::move(image)) {
  require_positive_dim(image_.size(), "IndexMap");
  for (std::size_t alpha = 0; alpha < image_.size(); ++alpha) {
    if (image_[alpha] >= image_.size()) {
      throw ValidationError("index map value " + std::to_string(image_[alpha]) +
                            " at position " + std::to_string(alpha) +
                            " is outside [0, " + std::to_string(image_.size()) +
                            ")");
    }
  }
}

IndexMap IndexMap::identity(std::size_t n) {
  require_positive_dim(n, "IndexMap");
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return IndexMap(std::move(image));
}

IndexMap IndexMap::constant(std::size_t n, std::size_t target) {
  require_positive_dim(n, "IndexMap");
  if (target >= n) {
    throw IndexError("constant map target " + std::to_string(target) +
                     " is outside [0, " + std::to_string(n) + ")");
  }
  return IndexMap(std::vector<std::size_t>(n, target));
}

std::size_t IndexMap::image_size() const {
  std::vector<char> hit(image_.size(), 0);
  std::size_t distinct = 0;
  for (std::size_t value : image_) {
    if (!hit[value]) {
      hit[value] = 1;
      ++distinct;
    }
  }
  return distinct;
}

bool IndexMap::is_injective() const {
  std::vector<char> hit(image_.size(), 0);
  for (std::size_t value : image_) {
    if (hit[value]) return false;
    hit[value] = 1;
  }
  return true;
}

WeightVector::WeightVector(std::vector<Complex> entries)
    : entries_(std::move(entries)) {
  require_positive_dim(entries_.size(), "WeightVector");
  for (std::size_t alpha = 0; alpha < entries_.size(); ++alpha) {
    if (!is_finite(entries_[alpha])) {
      throw ValidationError("weight at position " + std::to_string(alpha) +
                            " is not finite");
    }
  }
}

WeightVector WeightVector::ones(std::size_t n) {
  require_positive_dim(n, "WeightVector");
  return WeightVector(std::vector<Complex>(n, Complex{1.0, 0.0}));
}

WeightVector WeightVector::zeros(std::size_t n) {
  require_positive_dim(n, "WeightVector");
  return WeightVector(std::vector<Complex>(n));
}

Vector::Vector(std::vector<Complex> coords) : coords_(std::move(coords)) {
  require_positive_dim(coords_.size(), "Vector");
  for (std::size_t alpha = 0; alpha < coords_.size(); ++alpha) {
    if (!is_finite(coords_[alpha])) {
      throw ValidationError("vector coordinate " + std::to_string(alpha) +
                            " is not finite");
    }
  }
}

Vector Vector::zero(std::size_t n) {
  require_positive_dim(n, "Vector");
  return Vector(std::vector<Complex>(n));
}

double Vector::norm() const {
  double sum = 0.0;
  for (const Complex& z : coords_) sum += std::norm(z);
  return std::sqrt(sum);
}

WeightedShift::WeightedShift(IndexMap map, WeightVector weights)
    : map_(std::move(map)), weights_(std::move(weights)) {
  if (map_.dim() != weights_.dim()) {
    throw ShapeError("WeightedShift: index map dimension " +
                     std::to_string(map_.dim()) +
                     " != weight dimension " + std::to_string(weights_.dim()));
  }
}

WeightedShift WeightedShift::zero(std::size_t n) {
  return WeightedShift(IndexMap::identity(n), WeightVector::zeros(n));
}

ShiftSum::ShiftSum(std::vector<WeightedShift> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw ValidationError("ShiftSum needs at least one term");
  }
  const std::size_t n = terms_.front().dim();
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].dim() != n) {
      throw ShapeError("ShiftSum: term " + std::to_string(i) +
                       " has dimension " + std::to_string(terms_[i].dim()) +
                       ", expected " + std::to_string(n));
    }
  }
}

Vector basis_vector(std::size_t n, std::size_t theta) {
  require_positive_dim(n, "Vector");
  if (theta >= n) {
    throw IndexError("basis index " + std::to_string(theta) +
                     " is outside [0, " + std::to_string(n) + ")");
  }
  std::vector<Complex> coords(n);
  coords[theta] = Complex{1.0, 0.0};
  return Vector(std::move(coords));
}

Complex inner_product(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim()) {
    throw ShapeError("inner_product: dimensions " + std::to_string(x.dim()) +
                     " and " + std::to_string(y.dim()) + " do not match");
  }
  Complex sum{};
  for (std::size_t alpha = 0; alpha < x.dim(); ++alpha) {
    sum += x[alpha] * std::conj(y[alpha]);
  }
  return sum;
}

Vector apply(const WeightedShift& op, const Vector& x) {
  if (op.dim() != x.dim()) {
    throw ShapeError("apply: operator dimension " + std::to_string(op.dim()) +
                     " != vector dimension " + std::to_string(x.dim()));
  }
  const auto& image = op.map().image();
  const auto& weights = op.weights().entries();
  std::vector<Complex> out(op.dim());
  for (std::size_t alpha = 0; alpha < out.size(); ++alpha) {
    out[alpha] = weights[alpha] * x[image[alpha]];
  }
  return Vector(std::move(out));
}

Vector apply(const ShiftSum& sum, const Vector& x) {
  if (sum.dim() != x.dim()) {
    throw ShapeError("apply: sum dimension " + std::to_string(sum.dim()) +
                     " != vector dimension " + std::to_string(x.dim()));
  }
  std::vector<Complex> out(sum.dim());
  for (const WeightedShift& term : sum.terms()) {
    const auto& image = term.map().image();
    const auto& weights = term.weights().entries();
    for (std::size_t alpha = 0; alpha < out.size(); ++alpha) {
      out[alpha] += weights[alpha] * x[image[alpha]];
    }
  }
  return Vector(std::move(out));
}

}  // namespace wgs

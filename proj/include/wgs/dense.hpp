#ifndef WGS_DENSE_HPP_
#define WGS_DENSE_HPP_

// Dense-matrix ground truth. Everything here works on explicit n x n complex
// matrices and shares no code with the fiber-based routines it is used to
// cross-check, so agreement between the two paths is meaningful evidence.

#include <cstddef>
#include <vector>

#include "wgs/types.hpp"

namespace wgs {

class DenseMatrix {
 public:
  // Row-major entries, length n * n, all finite.
  DenseMatrix(std::size_t n, std::vector<Complex> row_major);

  static DenseMatrix zero(std::size_t n);
  static DenseMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

// Densification refuses dimensions above this cap so a stray call cannot
// allocate quadratic memory by accident. Callers may raise it explicitly.
inline constexpr std::size_t kDenseDimensionCap = 2048;

DenseMatrix to_dense(const WeightedShift& op,
                     std::size_t cap = kDenseDimensionCap);
DenseMatrix to_dense(const ShiftSum& sum, std::size_t cap = kDenseDimensionCap);

DenseMatrix conjugate_transpose(const DenseMatrix& m);
Vector matvec(const DenseMatrix& m, const Vector& x);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

// Entrywise checks with an absolute tolerance per entry.
bool hermitian_test(const DenseMatrix& m, double tol);
bool unitary_test(const DenseMatrix& m, double tol);

struct SpectralNormResult {
  double value = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

// Largest singular value of m, computed by seeded power iteration on the
// Gram matrix m^H m. Non-convergence within max_iters is reported through
// the flag, never thrown; the value is the best estimate reached.
SpectralNormResult spectral_norm(const DenseMatrix& m,
                                 std::size_t max_iters = 10000,
                                 double tol = 1e-12);

}  // namespace wgs

#endif  // WGS_DENSE_HPP_

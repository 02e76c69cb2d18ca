#include "wgs/dense.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace wgs {

namespace {

// Local vector helpers on raw storage; the public Vector type revalidates on
// every construction, which the iteration loop does not need.

std::vector<Complex> matvec_raw(const DenseMatrix& m,
                                const std::vector<Complex>& x) {
  const std::size_t n = m.dim();
  std::vector<Complex> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double norm_raw(const std::vector<Complex>& v) {
  double sum = 0.0;
  for (const Complex& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

// sum_i x[i] * conj(y[i])
Complex dot_raw(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw DomainError("to_dense: dimension " + std::to_string(n) +
                      " exceeds the densification cap " + std::to_string(cap));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t n, std::vector<Complex> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n_ == 0) throw ValidationError("DenseMatrix must have positive dimension");
  if (entries_.size() != n_ * n_) {
    throw ShapeError("DenseMatrix: expected " + std::to_string(n_ * n_) +
                     " entries, got " + std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!is_finite(z)) throw ValidationError("DenseMatrix entry is not finite");
  }
}

DenseMatrix DenseMatrix::zero(std::size_t n) {
  if (n == 0) throw ValidationError("DenseMatrix must have positive dimension");
  return DenseMatrix(n, std::vector<Complex>(n * n));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  if (n == 0) throw ValidationError("DenseMatrix must have positive dimension");
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Complex{1.0, 0.0};
  return DenseMatrix(n, std::move(e));
}

DenseMatrix to_dense(const WeightedShift& op, std::size_t cap) {
  const std::size_t n = op.dim();
  check_cap(n, cap);
  std::vector<Complex> e(n * n);
  const auto& image = op.map().image();
  const auto& weights = op.weights().entries();
  // Row alpha reads coordinate map(alpha), so it has a single potentially
  // nonzero entry there.
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    e[alpha * n + image[alpha]] = weights[alpha];
  }
  return DenseMatrix(n, std::move(e));
}

DenseMatrix to_dense(const ShiftSum& sum, std::size_t cap) {
  const std::size_t n = sum.dim();
  check_cap(n, cap);
  std::vector<Complex> e(n * n);
  for (const WeightedShift& term : sum.terms()) {
    const auto& image = term.map().image();
    const auto& weights = term.weights().entries();
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
      e[alpha * n + image[alpha]] += weights[alpha];
    }
  }
  return DenseMatrix(n, std::move(e));
}

DenseMatrix conjugate_transpose(const DenseMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e[i * n + j] = std::conj(m(j, i));
    }
  }
  return DenseMatrix(n, std::move(e));
}

Vector matvec(const DenseMatrix& m, const Vector& x) {
  if (m.dim() != x.dim()) {
    throw ShapeError("matvec: matrix dimension " + std::to_string(m.dim()) +
                     " != vector dimension " + std::to_string(x.dim()));
  }
  return Vector(matvec_raw(m, x.coords()));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw ShapeError("multiply: dimensions " + std::to_string(a.dim()) +
                     " and " + std::to_string(b.dim()) + " do not match");
  }
  const std::size_t n = a.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        e[i * n + j] += aik * b(k, j);
      }
    }
  }
  return DenseMatrix(n, std::move(e));
}

bool hermitian_test(const DenseMatrix& m, double tol) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

bool unitary_test(const DenseMatrix& m, double tol) {
  const std::size_t n = m.dim();
  const DenseMatrix mh = conjugate_transpose(m);
  const DenseMatrix left = multiply(mh, m);
  const DenseMatrix right = multiply(m, mh);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex id = (i == j) ? Complex{1.0, 0.0} : Complex{};
      if (std::abs(left(i, j) - id) > tol) return false;
      if (std::abs(right(i, j) - id) > tol) return false;
    }
  }
  return true;
}

SpectralNormResult spectral_norm(const DenseMatrix& m, std::size_t max_iters,
                                 double tol) {
  if (max_iters < 1) {
    throw DomainError("spectral_norm: max_iters must be at least 1");
  }
  if (!(tol > 0.0)) {
    throw DomainError("spectral_norm: tol must be positive");
  }

  const std::size_t n = m.dim();
  double fro2 = 0.0;
  for (const Complex& z : m.entries()) fro2 += std::norm(z);
  if (fro2 == 0.0) return {0.0, true, 0};

  const DenseMatrix mh = conjugate_transpose(m);
  // One application of the Gram matrix m^H m.
  const auto gram_apply = [&](const std::vector<Complex>& x) {
    return matvec_raw(mh, matvec_raw(m, x));
  };

  // Fixed seed mixed with the dimension: deterministic for a given matrix
  // size, and a dense start vector has a component along every eigenvector
  // for all practical purposes.
  std::mt19937_64 gen(0x5eedULL * 0x9e3779b97f4a7c15ULL + n);
  std::vector<Complex> v(n);
  for (Complex& z : v) {
    const double re = 2.0 * (double(gen() >> 11) * 0x1.0p-53) - 1.0;
    const double im = 2.0 * (double(gen() >> 11) * 0x1.0p-53) - 1.0;
    z = Complex{re, im};
  }
  {
    double vn = norm_raw(v);
    if (vn == 0.0) {
      v[0] = Complex{1.0, 0.0};
      vn = 1.0;
    }
    for (Complex& z : v) z /= vn;
  }

  double estimate = 0.0;
  double previous = -1.0;
  bool converged = false;
  std::size_t iterations = 0;
  int stable_checks = 0;

  for (std::size_t k = 1; k <= max_iters; ++k) {
    iterations = k;
    std::vector<Complex> w = gram_apply(v);
    const double wn = norm_raw(w);
    if (wn == 0.0) {
      // v landed in the kernel; with a dense random start this only happens
      // when the Gram matrix itself vanishes, which was handled above.
      estimate = 0.0;
      converged = true;
      break;
    }

    const Complex along = dot_raw(w, v);  // v has unit norm
    const double rayleigh = along.real();
    double theta = rayleigh;

    // Rayleigh-Ritz value on the orthonormalized pair {v, w}. On a
    // two-dimensional invariant subspace this is exact, so a near-tie
    // between the two leading eigenvalues of the Gram matrix does not
    // stall the estimate the way the bare Rayleigh quotient does.
    std::vector<Complex> r = w;
    for (std::size_t i = 0; i < n; ++i) r[i] -= along * v[i];
    const double beta = norm_raw(r);
    if (beta > wn * 1e-14) {
      for (Complex& z : r) z /= beta;
      const std::vector<Complex> z = gram_apply(r);
      const double h11 = rayleigh;
      const Complex h12 = 0.5 * (dot_raw(z, v) + std::conj(dot_raw(w, r)));
      const double h22 = dot_raw(z, r).real();
      const double mid = 0.5 * (h11 + h22);
      const double rad = std::hypot(0.5 * (h11 - h22), std::abs(h12));
      theta = std::max(rayleigh, mid + rad);
    }

    estimate = theta;
    if (previous >= 0.0 &&
        std::abs(estimate - previous) <= tol * std::max(estimate, 1e-300)) {
      if (++stable_checks >= 3 && k >= 8) {
        converged = true;
        break;
      }
    } else {
      stable_checks = 0;
    }
    previous = estimate;

    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
  }

  return {std::sqrt(std::max(estimate, 0.0)), converged, iterations};
}

}  // namespace wgs

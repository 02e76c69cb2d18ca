#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "wgs/generate.hpp"
#include "wgs/types.hpp"
#include "test_util.hpp"

using namespace wgs;
using testutil::close;

namespace {

const Complex kI{0.0, 1.0};

}  // namespace

TEST_CASE("basis_vector places a single one") {
  Vector e = basis_vector(3, 1);
  CHECK(e.dim() == 3);
  CHECK(e[0] == Complex{0.0, 0.0});
  CHECK(e[1] == Complex{1.0, 0.0});
  CHECK(e[2] == Complex{0.0, 0.0});
  CHECK(e.norm() == doctest::Approx(1.0));

  CHECK_THROWS_AS(basis_vector(3, 3), IndexError);
  CHECK_THROWS_AS(basis_vector(0, 0), ValidationError);
}

TEST_CASE("inner_product on hand examples") {
  // <(i,1), (i,1)> = i * conj(i) + 1 = 2
  Vector x({kI, Complex{1.0, 0.0}});
  CHECK(close(inner_product(x, x), Complex{2.0, 0.0}));

  // <(1+i,0), (2,0)> = (1+i) * 2 = 2+2i
  Vector a({Complex{1.0, 1.0}, Complex{0.0, 0.0}});
  Vector b({Complex{2.0, 0.0}, Complex{0.0, 0.0}});
  CHECK(close(inner_product(a, b), Complex{2.0, 2.0}));

  // Conjugate symmetry in the second slot.
  CHECK(close(inner_product(b, a), std::conj(inner_product(a, b))));

  Vector longer = Vector::zero(3);
  CHECK_THROWS_AS(inner_product(a, longer), ShapeError);
}

TEST_CASE("inner_product is conjugate symmetric and recovers the norm") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 1 + seed % 9;
    Vector x = random_vector(n, seed);
    Vector y = random_vector(n, seed + 1000);
    CHECK(close(inner_product(x, y), std::conj(inner_product(y, x))));
    const Complex xx = inner_product(x, x);
    CHECK(std::abs(xx.imag()) <= 1e-14);
    CHECK(std::sqrt(xx.real()) == doctest::Approx(x.norm()).epsilon(1e-12));
  }
}

TEST_CASE("apply on a constant map scales the read coordinate") {
  // Every coordinate reads x[0]; weights 1,2,3 fan it out.
  WeightedShift op(IndexMap::constant(3, 0),
                   WeightVector({Complex{1.0, 0.0}, Complex{2.0, 0.0},
                                  Complex{3.0, 0.0}}));
  Vector x({Complex{5.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}});
  Vector y = apply(op, x);
  CHECK(close(y[0], Complex{5.0, 0.0}));
  CHECK(close(y[1], Complex{10.0, 0.0}));
  CHECK(close(y[2], Complex{15.0, 0.0}));
}

TEST_CASE("apply on a weighted swap") {
  WeightedShift op(IndexMap({1, 0}),
                   WeightVector({Complex{2.0, 1.0}, Complex{2.0, -1.0}}));
  Vector x({Complex{1.0, 0.0}, Complex{1.0, 0.0}});
  Vector y = apply(op, x);
  // out[0] = w[0] * x[1], out[1] = w[1] * x[0]
  CHECK(close(y[0], Complex{2.0, 1.0}));
  CHECK(close(y[1], Complex{2.0, -1.0}));

  CHECK_THROWS_AS(apply(op, Vector::zero(3)), ShapeError);
}

TEST_CASE("apply hits basis vectors according to the map") {
  // apply(op, e_b)[a] is w[a] when map(a) = b and zero otherwise; checking
  // all columns this way pins the full matrix of the operator.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WeightedShift op = random_operator(6, seed, 0.25);
    for (std::size_t b = 0; b < 6; ++b) {
      Vector col = apply(op, basis_vector(6, b));
      for (std::size_t a = 0; a < 6; ++a) {
        Complex want = op.map()(a) == b ? op.weights()[a] : Complex{};
        CHECK(close(col[a], want));
      }
    }
  }
}

TEST_CASE("apply is linear") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 7;
    WeightedShift op = random_operator(n, seed, 0.2);
    Vector x = random_vector(n, 3 * seed + 1);
    Vector y = random_vector(n, 3 * seed + 2);
    const Complex lam{0.7, -1.3};

    Vector lhs = apply(op, testutil::add(testutil::scale(lam, x), y));
    Vector rhs =
        testutil::add(testutil::scale(lam, apply(op, x)), apply(op, y));
    CHECK(testutil::distance(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("apply of a sum accumulates terms") {
  // Two single-entry shifts that together exchange the coordinates.
  WeightedShift lower(IndexMap({1, 1}),
                      WeightVector({Complex{1.0, 0.0}, Complex{}}));
  WeightedShift upper(IndexMap({0, 0}),
                      WeightVector({Complex{}, Complex{1.0, 0.0}}));
  ShiftSum sum({lower, upper});
  Vector x({Complex{3.0, 1.0}, Complex{-2.0, 0.5}});
  Vector y = apply(sum, x);
  CHECK(close(y[0], x[1]));
  CHECK(close(y[1], x[0]));

  CHECK_THROWS_AS(apply(sum, Vector::zero(3)), ShapeError);
}

TEST_CASE("apply of a sum matches summing the individual applications") {
  std::mt19937_64 gen(99);
  for (int round = 0; round < 15; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(round) % 5;
    std::vector<WeightedShift> terms;
    const std::size_t count = 1 + static_cast<std::size_t>(gen() % 4);
    for (std::size_t t = 0; t < count; ++t) {
      terms.push_back(random_operator(n, gen(), 0.3));
    }
    ShiftSum sum(terms);
    Vector x = random_vector(n, gen());

    Vector expect = Vector::zero(n);
    for (const WeightedShift& term : terms) {
      expect = testutil::add(expect, apply(term, x));
    }
    CHECK(testutil::distance(apply(sum, x), expect) <= 1e-12);
  }
}

TEST_CASE("IndexMap validates and classifies") {
  CHECK_THROWS_AS(IndexMap({0, 3}), ValidationError);  // value out of range
  CHECK_THROWS_AS(IndexMap(std::vector<std::size_t>{}), ValidationError);

  IndexMap id = IndexMap::identity(4);
  CHECK(id.image_size() == 4);
  CHECK(id.is_injective());
  CHECK(id.is_bijective());

  IndexMap c = IndexMap::constant(4, 2);
  CHECK(c.image_size() == 1);
  CHECK_FALSE(c.is_injective());
  CHECK(c(0) == 2);
  CHECK(c(3) == 2);
  CHECK_THROWS_AS(IndexMap::constant(4, 4), IndexError);

  IndexMap cycle({1, 2, 0});
  CHECK(cycle.is_bijective());
  CHECK(cycle == IndexMap({1, 2, 0}));
  CHECK_FALSE(cycle == IndexMap::identity(3));
}

TEST_CASE("WeightVector and Vector reject non-finite entries") {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(WeightVector({Complex{inf, 0.0}}), ValidationError);
  CHECK_THROWS_AS(WeightVector({Complex{0.0, nan}}), ValidationError);
  CHECK_THROWS_AS(Vector({Complex{nan, 0.0}}), ValidationError);
  CHECK_THROWS_AS(WeightVector(std::vector<Complex>{}), ValidationError);
  CHECK_THROWS_AS(Vector(std::vector<Complex>{}), ValidationError);

  CHECK(WeightVector::ones(3)[2] == Complex{1.0, 0.0});
  CHECK(WeightVector::zeros(3)[0] == Complex{0.0, 0.0});
  CHECK(Vector({Complex{3.0, 0.0}, Complex{0.0, 4.0}}).norm() ==
        doctest::Approx(5.0));
}

TEST_CASE("WeightedShift construction and the zero operator") {
  CHECK_THROWS_AS(
      WeightedShift(IndexMap::identity(2), WeightVector::ones(3)), ShapeError);

  WeightedShift z = WeightedShift::zero(4);
  CHECK(z.dim() == 4);
  CHECK(z.map() == IndexMap::identity(4));
  Vector x = random_vector(4, 7);
  CHECK(apply(z, x).norm() == 0.0);
}

TEST_CASE("ShiftSum construction") {
  CHECK_THROWS_AS(ShiftSum(std::vector<WeightedShift>{}), ValidationError);
  CHECK_THROWS_AS(
      ShiftSum({WeightedShift::zero(2), WeightedShift::zero(3)}), ShapeError);
  ShiftSum s({WeightedShift::zero(2), WeightedShift::zero(2)});
  CHECK(s.dim() == 2);
  CHECK(s.term_count() == 2);
}

#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "wgs/adjoint.hpp"
#include "wgs/analysis.hpp"
#include "wgs/semigroup.hpp"
#include "test_util.hpp"

using namespace wgs;
using testutil::close;

namespace {

const Complex kI{0.0, 1.0};
const Complex kOne{1.0, 0.0};

}  // namespace

TEST_CASE("reciprocal rule emits 1/(k+1)") {
  NullSequenceRule rule = NullSequenceRule::reciprocal();
  CHECK(close(rule.element(1), Complex{0.5, 0.0}));
  CHECK(close(rule.element(3), Complex{0.25, 0.0}));
  CHECK_THROWS_AS(rule.element(0), DomainError);
  // |1/(k+1)| < 1/k, strictly decreasing, never zero: a long prefix passes.
  CHECK_NOTHROW(rule.validate_prefix(1000));
}

TEST_CASE("geometric rule validates its parameters and its prefix") {
  CHECK_THROWS_AS(NullSequenceRule::geometric(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(NullSequenceRule::geometric(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(NullSequenceRule::geometric(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(NullSequenceRule::geometric(1.0, 0.0), DomainError);

  NullSequenceRule rule = NullSequenceRule::geometric(1.0, 0.5);
  CHECK(close(rule.element(1), Complex{0.5, 0.0}));
  CHECK(close(rule.element(2), Complex{0.25, 0.0}));
  CHECK_NOTHROW(rule.validate_prefix(60));

  // scale * ratio stays below 1 here, but the k=1 envelope still fails:
  // t_1 = 1.5 is not below 1/1.
  NullSequenceRule hot = NullSequenceRule::geometric(3.0, 0.5);
  CHECK_THROWS_AS(hot.validate_prefix(1), DomainError);
  // 1.9 * 2^-k stays below 1/k for every k.
  CHECK_NOTHROW(NullSequenceRule::geometric(1.9, 0.5).validate_prefix(200));
}

TEST_CASE("finite alphabets validate their elements") {
  CHECK_THROWS_AS(WeightAlphabet::finite_set({}), ValidationError);
  CHECK_THROWS_AS(WeightAlphabet::finite_set({Complex{}}), ValidationError);
  CHECK_THROWS_AS(WeightAlphabet::finite_set({kOne, kOne}), ValidationError);

  WeightAlphabet signs = WeightAlphabet::finite_set({kOne, -kOne});
  CHECK(signs.kind() == WeightAlphabet::Kind::kFiniteSet);
  CHECK(signs.contains(kOne));
  CHECK(signs.contains(-kOne));
  CHECK_FALSE(signs.contains(Complex{0.5, 0.0}));
  CHECK_FALSE(signs.contains(Complex{}));  // zero is implicit, never a member
  CHECK(signs.describe() == "finite{1+0i, -1+0i}");

  // Wrong-kind accessors refuse.
  CHECK_THROWS_AS(signs.min_modulus(), DomainError);
  CHECK_THROWS_AS(signs.rule(), DomainError);
}

TEST_CASE("annulus alphabets test the modulus floor") {
  CHECK_THROWS_AS(WeightAlphabet::annulus(0.0), ValidationError);
  CHECK_THROWS_AS(WeightAlphabet::annulus(-2.0), ValidationError);

  WeightAlphabet ring = WeightAlphabet::annulus(0.5);
  CHECK(ring.min_modulus() == 0.5);
  CHECK(ring.contains(Complex{0.5, 0.0}));  // boundary included
  CHECK(ring.contains(Complex{0.0, -10.0}));
  CHECK_FALSE(ring.contains(Complex{0.49, 0.0}));
  CHECK_FALSE(ring.contains(Complex{}));
  CHECK_THROWS_AS(ring.elements(), DomainError);
}

TEST_CASE("null sequence alphabets contain exactly the rule's range") {
  WeightAlphabet tail =
      WeightAlphabet::null_sequence(NullSequenceRule::reciprocal());
  CHECK(tail.contains(Complex{0.5, 0.0}));
  CHECK(tail.contains(Complex{1.0 / 7.0, 0.0}));
  CHECK_FALSE(tail.contains(Complex{0.3, 0.0}));
  CHECK_FALSE(tail.contains(Complex{0.7, 0.0}));  // above the first element
  CHECK_FALSE(tail.contains(Complex{}));
  CHECK(tail.describe() == "null_sequence{reciprocal}");
  CHECK(tail.rule().name() == "reciprocal");
}

TEST_CASE("conjugate invariance of alphabets") {
  CHECK(is_conjugate_invariant(WeightAlphabet::finite_set({kOne, -kOne})));
  CHECK(is_conjugate_invariant(WeightAlphabet::finite_set({kI, -kI})));
  CHECK_FALSE(is_conjugate_invariant(WeightAlphabet::finite_set({kI})));
  CHECK_FALSE(is_conjugate_invariant(
      WeightAlphabet::finite_set({Complex{1.0, 1.0}})));
  CHECK(is_conjugate_invariant(
      WeightAlphabet::finite_set({Complex{1.0, 1.0}, Complex{1.0, -1.0}})));
  CHECK(is_conjugate_invariant(WeightAlphabet::annulus(0.25)));
  CHECK(is_conjugate_invariant(
      WeightAlphabet::null_sequence(NullSequenceRule::reciprocal())));
  CHECK_THROWS_AS(
      is_conjugate_invariant(WeightAlphabet::annulus(1.0), 0), DomainError);
}

TEST_CASE("zero as a limit point and the invariance prediction") {
  WeightAlphabet signs = WeightAlphabet::finite_set({kOne, -kOne});
  WeightAlphabet ring = WeightAlphabet::annulus(0.1);
  WeightAlphabet tail =
      WeightAlphabet::null_sequence(NullSequenceRule::reciprocal());

  CHECK_FALSE(zero_is_limit_point(signs));
  CHECK_FALSE(zero_is_limit_point(ring));
  CHECK(zero_is_limit_point(tail));

  // Alphabets bounded away from zero are safe at any index set size.
  CHECK(predict_adjoint_invariance(signs, false));
  CHECK(predict_adjoint_invariance(ring, false));
  // A null sequence only survives when the index set is finite.
  CHECK(predict_adjoint_invariance(tail, true));
  CHECK_FALSE(predict_adjoint_invariance(tail, false));

  CHECK_THROWS_AS(
      predict_adjoint_invariance(WeightAlphabet::finite_set({kI}), false),
      DomainError);
}

TEST_CASE("check_closure accepts alphabet-weighted sums") {
  WeightAlphabet signs = WeightAlphabet::finite_set({kOne, -kOne});
  WeightedShift swap(IndexMap({1, 0}), WeightVector({kOne, -kOne}));
  ClosureReport report = check_closure(ShiftSum({swap}), signs);
  CHECK(report.closed);
  CHECK(report.witnesses.empty());

  // Conjugation maps {i, -i} onto itself.
  WeightAlphabet imag = WeightAlphabet::finite_set({kI, -kI});
  WeightedShift spin(IndexMap::constant(3, 0),
                     WeightVector({kI, kI, -kI}));
  CHECK(check_closure(ShiftSum({spin}), imag).closed);
}

TEST_CASE("check_closure rejects bad inputs") {
  WeightAlphabet signs = WeightAlphabet::finite_set({kOne, -kOne});
  // Input weight outside the alphabet.
  WeightedShift off(IndexMap({1, 0}),
                    WeightVector({kOne, Complex{0.5, 0.0}}));
  CHECK_THROWS_AS(check_closure(ShiftSum({off}), signs), DomainError);
  // Alphabet that is not conjugate invariant.
  CHECK_THROWS_AS(check_closure(ShiftSum({WeightedShift::zero(2)}),
                                WeightAlphabet::finite_set({kI})),
                  DomainError);
}

TEST_CASE("check_closure reports witnesses with their location") {
  // A weight below the zero tolerance passes the input screen, but the
  // decomposition keeps anything that is not exactly zero, so its conjugate
  // surfaces as an out-of-alphabet witness.
  WeightAlphabet ones = WeightAlphabet::finite_set({kOne});
  WeightedShift op(IndexMap({1, 0}),
                   WeightVector({kOne, Complex{1e-13, 0.0}}));
  ClosureReport report = check_closure(ShiftSum({op}), ones);
  CHECK_FALSE(report.closed);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].term_index == 0);
  CHECK(report.witnesses[0].coordinate == 0);
  CHECK(close(report.witnesses[0].weight, Complex{1e-13, 0.0}));
}

TEST_CASE("closure holds across random alphabet-weighted sums") {
  WeightAlphabet imag = WeightAlphabet::finite_set({kI, -kI});
  std::mt19937_64 gen(515);
  for (int round = 0; round < 25; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(round) % 6;
    std::vector<WeightedShift> terms;
    const std::size_t count = 1 + rng::pick_index(gen, 3);
    for (std::size_t t = 0; t < count; ++t) {
      std::vector<std::size_t> image(n);
      std::vector<Complex> weights(n);
      for (std::size_t a = 0; a < n; ++a) {
        image[a] = rng::pick_index(gen, n);
        const std::size_t pick = rng::pick_index(gen, 3);
        weights[a] = pick == 0 ? Complex{} : (pick == 1 ? kI : -kI);
      }
      terms.emplace_back(IndexMap(image), WeightVector(weights));
    }
    ClosureReport report = check_closure(ShiftSum(terms), imag);
    CHECK(report.closed);
    CHECK(report.witnesses.empty());
  }
}

TEST_CASE("counterexample_operator wiring") {
  NullSequenceRule rule = NullSequenceRule::reciprocal();
  CHECK_THROWS_AS(counterexample_operator(1, rule), DomainError);

  WeightedShift op = counterexample_operator(3, rule);
  CHECK(op.map() == IndexMap::constant(3, 1));
  CHECK(op.weights()[0] == Complex{});
  CHECK(close(op.weights()[1], Complex{0.5, 0.0}));
  CHECK(close(op.weights()[2], Complex{1.0 / 3.0, 0.0}));

  // Inadmissible rules are rejected before any operator is built.
  CHECK_THROWS_AS(
      counterexample_operator(2, NullSequenceRule::geometric(3.0, 0.5)),
      DomainError);
}

TEST_CASE("counterexample truncations exhaust every depth") {
  NullSequenceRule rule = NullSequenceRule::reciprocal();
  for (std::size_t n : {2, 5, 17}) {
    WeightedShift op = counterexample_operator(n, rule);
    CHECK(min_term_count(op) == n - 1);
    CHECK(adjoint_decompose(op).terms.size() == n - 1);
  }

  // The norm is the l2 mass of the single live fiber; sum the rule
  // directly as an independent route.
  WeightedShift big = counterexample_operator(100, rule);
  double mass = 0.0;
  for (std::size_t k = 1; k < 100; ++k) mass += std::norm(rule.element(k));
  CHECK(fiber_norm(big) == doctest::Approx(std::sqrt(mass)));
  // The full series sums to pi^2/6 - 1, so every truncation stays below.
  const double ceiling = std::sqrt(M_PI * M_PI / 6.0 - 1.0);
  CHECK(fiber_norm(big) < ceiling);
}

TEST_CASE("truncation study validates its dimension list") {
  NullSequenceRule rule = NullSequenceRule::reciprocal();
  CHECK_THROWS_AS(run_truncation_study(rule, {}), DomainError);
  CHECK_THROWS_AS(run_truncation_study(rule, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(run_truncation_study(rule, {{4, 4}}), DomainError);
  CHECK_THROWS_AS(run_truncation_study(rule, {{4, 2}}), DomainError);
}

TEST_CASE("truncation study records the growth pattern") {
  NullSequenceRule rule = NullSequenceRule::reciprocal();
  TruncationStudy study = run_truncation_study(rule, {{2, 4, 8}});
  CHECK(study.dimensions == std::vector<std::size_t>{2, 4, 8});
  CHECK(study.term_counts == std::vector<std::size_t>{1, 3, 7});

  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t n = study.dimensions[i];
    double mass = 0.0;
    for (std::size_t k = 1; k < n; ++k) mass += std::norm(rule.element(k));
    CHECK(study.norm_bounds[i] == doctest::Approx(std::sqrt(mass)));
    // Smallest weight is t_{n-1} = 1/n, so the reciprocal sup is n + 1/n.
    CHECK(study.invertibility_bounds[i] ==
          doctest::Approx(double(n) + 1.0 / double(n)));
  }

  // Norms rise toward the series limit while term counts track n - 1.
  CHECK(study.norm_bounds[0] < study.norm_bounds[1]);
  CHECK(study.norm_bounds[1] < study.norm_bounds[2]);

  TruncationStudy geo = run_truncation_study(
      NullSequenceRule::geometric(1.0, 0.5), {{2, 3}});
  CHECK(geo.term_counts == std::vector<std::size_t>{1, 2});
  CHECK(geo.norm_bounds[0] == doctest::Approx(0.5));
  CHECK(geo.norm_bounds[1] == doctest::Approx(std::sqrt(0.25 + 0.0625)));
}

#ifndef WGS_SEMIGROUP_HPP_
#define WGS_SEMIGROUP_HPP_

// Alphabet-constrained families of weighted shifts and their behavior under
// adjoints. The additive semigroup generated by shifts whose weights come
// from a fixed alphabet A (plus zero) is closed under adjoints exactly when
// the index set is finite or 0 is not a limit point of A; the null-sequence
// alphabets below exist to exhibit the failure mode, where truncations of a
// single operator need ever more adjoint terms as the dimension grows.

#include <cstddef>
#include <string>
#include <vector>

#include "wgs/adjoint.hpp"
#include "wgs/types.hpp"

namespace wgs {

// Emits a strictly decreasing null sequence t_1, t_2, ... of nonzero
// weights with |t_k| < 1/k. The reciprocal rule is t_k = 1/(k+1); the
// geometric rule is t_k = scale * ratio^k. Validation happens eagerly on
// whatever prefix a caller materializes.
class NullSequenceRule {
 public:
  static NullSequenceRule reciprocal();
  static NullSequenceRule geometric(double scale, double ratio);

  // k is 1-based.
  Complex element(std::size_t k) const;
  // Checks |t_k| < 1/k, strict decrease, and nonvanishing for k = 1..count.
  void validate_prefix(std::size_t count) const;

  const std::string& name() const { return name_; }
  double scale() const { return scale_; }
  double ratio() const { return ratio_; }

 private:
  NullSequenceRule(std::string name, double scale, double ratio)
      : name_(std::move(name)), scale_(scale), ratio_(ratio) {}

  std::string name_;
  double scale_ = 0.0;
  double ratio_ = 0.0;
};

// A set of admissible nonzero weights: either an explicit finite set, the
// closed region |z| >= min_modulus, or the range of a null-sequence rule.
class WeightAlphabet {
 public:
  enum class Kind { kFiniteSet, kAnnulus, kNullSequence };

  static WeightAlphabet finite_set(std::vector<Complex> elements);
  static WeightAlphabet annulus(double min_modulus);
  static WeightAlphabet null_sequence(NullSequenceRule rule);

  Kind kind() const { return kind_; }
  const std::vector<Complex>& elements() const;
  double min_modulus() const;
  const NullSequenceRule& rule() const;

  // Membership of a nonzero weight, up to the tolerance. Zero is never a
  // member; callers treating A-union-{0} test zero separately.
  bool contains(Complex z, const Tolerance& tol = default_tolerance()) const;

  std::string describe() const;

 private:
  WeightAlphabet(Kind kind, std::vector<Complex> elements, double min_modulus,
                 std::vector<NullSequenceRule> rule);

  Kind kind_;
  std::vector<Complex> elements_;
  double min_modulus_ = 0.0;
  std::vector<NullSequenceRule> rule_;  // empty or a single rule
};

// Closed under complex conjugation. Finite sets are checked exactly;
// annuli are invariant by construction; null-sequence rules are spot
// checked on their first `samples` elements.
bool is_conjugate_invariant(const WeightAlphabet& alphabet,
                            std::size_t samples = 64);

// Whether 0 is a limit point of the alphabet.
bool zero_is_limit_point(const WeightAlphabet& alphabet);

// For a conjugate-invariant alphabet: adjoints of A-weighted sums stay
// A-weighted exactly when the index set is finite or 0 is not a limit
// point. Throws DomainError when the alphabet is not conjugate invariant.
bool predict_adjoint_invariance(const WeightAlphabet& alphabet,
                                bool index_set_finite,
                                std::size_t samples = 64);

struct ClosureWitness {
  std::size_t term_index = 0;   // position in the adjoint term list
  std::size_t coordinate = 0;
  Complex weight;
};

struct ClosureReport {
  bool closed = true;
  std::vector<ClosureWitness> witnesses;
};

// Decomposes the adjoint of the sum and checks every resulting nonzero
// weight for membership in A. Preconditions: the alphabet is conjugate
// invariant and every input weight already lies in A or is zero; violations
// throw DomainError naming the offending weight.
ClosureReport check_closure(const ShiftSum& sum, const WeightAlphabet& alphabet,
                            const Tolerance& tol = default_tolerance());

// The constant-map operator whose adjoint term count exhausts truncations:
// every index reads coordinate 1, coordinate 0 carries weight zero, and
// coordinate k carries the rule's t_k. Requires n >= 2.
WeightedShift counterexample_operator(std::size_t n,
                                      const NullSequenceRule& rule);

struct TruncationStudy {
  std::vector<std::size_t> dimensions;
  std::vector<std::size_t> term_counts;
  std::vector<double> norm_bounds;
  std::vector<double> invertibility_bounds;
};

// Runs counterexample_operator across strictly ascending dimensions (each
// at least 2) and records the adjoint term count, the fiber norm, and the
// sup of |w| + 1/|w| over nonzero weights.
TruncationStudy run_truncation_study(const NullSequenceRule& rule,
                                     const std::vector<std::size_t>& dimensions);

}  // namespace wgs

#endif  // WGS_SEMIGROUP_HPP_

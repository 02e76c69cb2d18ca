#include "wgs/semigroup.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "wgs/analysis.hpp"

namespace wgs {

namespace {

std::string format_complex(Complex z) {
  std::ostringstream out;
  out << z.real();
  // Display only: a negative zero imaginary part would print as "+-0i".
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  if (im >= 0 || std::isnan(im)) {
    out << "+" << im << "i";
  } else {
    out << im << "i";
  }
  return out.str();
}

// Membership probes against a null sequence stop once the sequence has
// dropped clearly below the probed modulus; this caps the scan for
// pathological rules.
constexpr std::size_t kNullSequenceProbeLimit = 1000000;

}  // namespace

NullSequenceRule NullSequenceRule::reciprocal() {
  return NullSequenceRule("reciprocal", 0.0, 0.0);
}

NullSequenceRule NullSequenceRule::geometric(double scale, double ratio) {
  if (!(scale > 0.0) || !is_finite(scale)) {
    throw DomainError("geometric rule: scale must be positive and finite");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError("geometric rule: ratio must lie in (0, 1)");
  }
  return NullSequenceRule("geometric", scale, ratio);
}

Complex NullSequenceRule::element(std::size_t k) const {
  if (k == 0) throw DomainError("null sequence indices are 1-based");
  if (name_ == "reciprocal") {
    return Complex{1.0 / static_cast<double>(k + 1), 0.0};
  }
  return Complex{scale_ * std::pow(ratio_, static_cast<double>(k)), 0.0};
}

void NullSequenceRule::validate_prefix(std::size_t count) const {
  double previous = 0.0;
  for (std::size_t k = 1; k <= count; ++k) {
    const double modulus = std::abs(element(k));
    if (!(modulus > 0.0)) {
      throw DomainError("null sequence rule \"" + name_ + "\" vanishes at k=" +
                        std::to_string(k));
    }
    if (!(modulus < 1.0 / static_cast<double>(k))) {
      throw DomainError("null sequence rule \"" + name_ + "\" violates |t_k| < 1/k at k=" +
                        std::to_string(k));
    }
    if (k > 1 && !(modulus < previous)) {
      throw DomainError("null sequence rule \"" + name_ +
                        "\" is not strictly decreasing at k=" +
                        std::to_string(k));
    }
    previous = modulus;
  }
}

WeightAlphabet::WeightAlphabet(Kind kind, std::vector<Complex> elements,
                               double min_modulus,
                               std::vector<NullSequenceRule> rule)
    : kind_(kind),
      elements_(std::move(elements)),
      min_modulus_(min_modulus),
      rule_(std::move(rule)) {}

WeightAlphabet WeightAlphabet::finite_set(std::vector<Complex> elements) {
  if (elements.empty()) {
    throw ValidationError("finite alphabet must be nonempty");
  }
  const Tolerance& tol = default_tolerance();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!is_finite(elements[i])) {
      throw ValidationError("alphabet element " + std::to_string(i) +
                            " is not finite");
    }
    if (tol.is_zero(elements[i])) {
      throw ValidationError("alphabet element " + std::to_string(i) +
                            " is zero; zero is implicit and never a member");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tol.close(elements[i], elements[j])) {
        throw ValidationError("alphabet elements " + std::to_string(j) +
                              " and " + std::to_string(i) + " coincide");
      }
    }
  }
  return WeightAlphabet(Kind::kFiniteSet, std::move(elements), 0.0, {});
}

WeightAlphabet WeightAlphabet::annulus(double min_modulus) {
  if (!(min_modulus > 0.0) || !is_finite(min_modulus)) {
    throw ValidationError("annulus alphabet needs a positive finite modulus");
  }
  return WeightAlphabet(Kind::kAnnulus, {}, min_modulus, {});
}

WeightAlphabet WeightAlphabet::null_sequence(NullSequenceRule rule) {
  std::vector<NullSequenceRule> holder;
  holder.push_back(std::move(rule));
  return WeightAlphabet(Kind::kNullSequence, {}, 0.0, std::move(holder));
}

const std::vector<Complex>& WeightAlphabet::elements() const {
  if (kind_ != Kind::kFiniteSet) {
    throw DomainError("alphabet has no element list");
  }
  return elements_;
}

double WeightAlphabet::min_modulus() const {
  if (kind_ != Kind::kAnnulus) {
    throw DomainError("alphabet has no modulus floor");
  }
  return min_modulus_;
}

const NullSequenceRule& WeightAlphabet::rule() const {
  if (kind_ != Kind::kNullSequence) {
    throw DomainError("alphabet has no null sequence rule");
  }
  return rule_.front();
}

bool WeightAlphabet::contains(Complex z, const Tolerance& tol) const {
  switch (kind_) {
    case Kind::kFiniteSet:
      for (const Complex& e : elements_) {
        if (tol.close(z, e)) return true;
      }
      return false;
    case Kind::kAnnulus:
      return std::abs(z) >= min_modulus_ * (1.0 - tol.rtol) - tol.atol;
    case Kind::kNullSequence: {
      const double modulus = std::abs(z);
      if (modulus <= tol.atol) return false;
      const NullSequenceRule& r = rule_.front();
      for (std::size_t k = 1; k <= kNullSequenceProbeLimit; ++k) {
        const Complex t = r.element(k);
        if (tol.close(z, t)) return true;
        // Moduli decrease strictly, so once the sequence is clearly below
        // |z| nothing later can match.
        if (std::abs(t) < modulus * (1.0 - tol.rtol) - tol.atol) return false;
      }
      return false;
    }
  }
  return false;
}

std::string WeightAlphabet::describe() const {
  switch (kind_) {
    case Kind::kFiniteSet: {
      std::string out = "finite{";
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ", ";
        out += format_complex(elements_[i]);
      }
      return out + "}";
    }
    case Kind::kAnnulus:
      return "annulus{|z| >= " + std::to_string(min_modulus_) + "}";
    case Kind::kNullSequence:
      return "null_sequence{" + rule_.front().name() + "}";
  }
  return "?";
}

bool is_conjugate_invariant(const WeightAlphabet& alphabet,
                            std::size_t samples) {
  if (samples == 0) {
    throw DomainError("is_conjugate_invariant: need at least one sample");
  }
  switch (alphabet.kind()) {
    case WeightAlphabet::Kind::kFiniteSet: {
      const auto& elements = alphabet.elements();
      for (const Complex& e : elements) {
        const Complex c = std::conj(e);
        bool found = false;
        for (const Complex& other : elements) {
          if (c == other) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
    case WeightAlphabet::Kind::kAnnulus:
      return true;  // |conj z| = |z|
    case WeightAlphabet::Kind::kNullSequence: {
      for (std::size_t k = 1; k <= samples; ++k) {
        const Complex t = alphabet.rule().element(k);
        if (!alphabet.contains(std::conj(t))) return false;
      }
      return true;
    }
  }
  return false;
}

bool zero_is_limit_point(const WeightAlphabet& alphabet) {
  switch (alphabet.kind()) {
    case WeightAlphabet::Kind::kFiniteSet:
      return false;  // finite sets of nonzero points stay away from 0
    case WeightAlphabet::Kind::kAnnulus:
      return false;  // bounded below by the modulus floor
    case WeightAlphabet::Kind::kNullSequence:
      return true;  // |t_k| < 1/k by construction
  }
  return false;
}

bool predict_adjoint_invariance(const WeightAlphabet& alphabet,
                                bool index_set_finite, std::size_t samples) {
  if (!is_conjugate_invariant(alphabet, samples)) {
    throw DomainError("predict_adjoint_invariance: alphabet " +
                      alphabet.describe() + " is not conjugate invariant");
  }
  return index_set_finite || !zero_is_limit_point(alphabet);
}

ClosureReport check_closure(const ShiftSum& sum, const WeightAlphabet& alphabet,
                            const Tolerance& tol) {
  if (!is_conjugate_invariant(alphabet)) {
    throw DomainError("check_closure: alphabet " + alphabet.describe() +
                      " is not conjugate invariant");
  }
  const auto& terms = sum.terms();
  for (std::size_t ti = 0; ti < terms.size(); ++ti) {
    const auto& weights = terms[ti].weights().entries();
    for (std::size_t alpha = 0; alpha < weights.size(); ++alpha) {
      const Complex w = weights[alpha];
      if (tol.is_zero(w) || alphabet.contains(w, tol)) continue;
      throw DomainError("check_closure: input weight " + format_complex(w) +
                        " at term " + std::to_string(ti) + ", coordinate " +
                        std::to_string(alpha) + " is outside " +
                        alphabet.describe() + " and nonzero");
    }
  }

  ClosureReport report;
  const std::vector<WeightedShift> adjoint_terms = adjoint_of_sum(sum);
  for (std::size_t ti = 0; ti < adjoint_terms.size(); ++ti) {
    const auto& weights = adjoint_terms[ti].weights().entries();
    for (std::size_t b = 0; b < weights.size(); ++b) {
      const Complex u = weights[b];
      if (u == Complex{}) continue;  // padded or genuinely absent entries
      if (!alphabet.contains(u, tol)) {
        report.closed = false;
        report.witnesses.push_back({ti, b, u});
      }
    }
  }
  return report;
}

WeightedShift counterexample_operator(std::size_t n,
                                      const NullSequenceRule& rule) {
  if (n < 2) {
    throw DomainError("counterexample_operator: dimension must be at least 2, "
                      "got " +
                      std::to_string(n));
  }
  rule.validate_prefix(n - 1);
  std::vector<Complex> weights(n);
  for (std::size_t k = 1; k < n; ++k) weights[k] = rule.element(k);
  // All coordinates read index 1; the single fiber over 1 holds the whole
  // null sequence, so every truncation needs n - 1 adjoint terms.
  return WeightedShift(IndexMap::constant(n, 1),
                       WeightVector(std::move(weights)));
}

TruncationStudy run_truncation_study(
    const NullSequenceRule& rule, const std::vector<std::size_t>& dimensions) {
  if (dimensions.empty()) {
    throw DomainError("run_truncation_study: need at least one dimension");
  }
  for (std::size_t i = 0; i < dimensions.size(); ++i) {
    if (dimensions[i] < 2) {
      throw DomainError("run_truncation_study: dimensions must be at least 2");
    }
    if (i > 0 && dimensions[i] <= dimensions[i - 1]) {
      throw DomainError(
          "run_truncation_study: dimensions must be strictly ascending");
    }
  }

  TruncationStudy study;
  study.dimensions = dimensions;
  for (std::size_t n : dimensions) {
    const WeightedShift op = counterexample_operator(n, rule);
    study.term_counts.push_back(min_term_count(op));
    study.norm_bounds.push_back(fiber_norm(op));
    // n >= 2 guarantees at least the k=1 weight, so the bound exists.
    study.invertibility_bounds.push_back(*weight_reciprocal_bound(op));
  }
  return study;
}

}  // namespace wgs

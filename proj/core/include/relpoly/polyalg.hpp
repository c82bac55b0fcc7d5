#pragma once

#include <vector>

#include "relpoly/exact.hpp"
#include "relpoly/numeric.hpp"

namespace relpoly {

/// Polynomial written as sum c_k p^k (1-p)^(n-k), exact rational weights.
struct NFormPolynomial {
  int n = 0;
  std::vector<Rational> coeffs;

  static NFormPolynomial from_counts(const CoefficientVector& cv);
  friend bool operator==(const NFormPolynomial&, const NFormPolynomial&) = default;
};

Rational nform_eval(const NFormPolynomial& poly, const Rational& p);

/// Monomial-basis polynomial with exact rational coefficients, ascending
/// powers, trailing zeros trimmed. Empty coefficient list is the zero
/// polynomial (degree -1).
class PowerPolynomial {
 public:
  PowerPolynomial() = default;
  explicit PowerPolynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator()(const Rational& p) const;

  friend bool operator==(const PowerPolynomial&, const PowerPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerPolynomial to_power_basis(const NFormPolynomial& poly);
PowerPolynomial derivative(const PowerPolynomial& poly, int order = 1);
PowerPolynomial add(const PowerPolynomial& a, const PowerPolynomial& b);
PowerPolynomial subtract(const PowerPolynomial& a, const PowerPolynomial& b);
PowerPolynomial scale(const PowerPolynomial& a, const Rational& factor);
/// q(p) = P(1-p), computed by exact coefficient transformation.
PowerPolynomial compose_one_minus_p(const PowerPolynomial& poly);

/// Piecewise-linear coefficient function through (k, N_k), evaluated on [0,n].
Rational coeff_function_eval(const CoefficientVector& cv, const Rational& x);

/// Divided difference over strictly increasing points; order = size - 1.
Rational divided_difference(const std::vector<Rational>& xs,
                            const std::vector<Rational>& values);

enum class SignClass { Negative = -1, Zero = 0, Positive = 1 };

struct SignRun {
  Rational lo, hi;
  SignClass sign;
};

/// Bracket [lo, hi] where the scanned derivative changes strict sign.
struct SignChange {
  Rational lo, hi;
  SignClass from, to;
};

struct ConvexityReport {
  int order = 0;
  std::vector<SignRun> runs;
  std::vector<SignChange> brackets;
};

/// Classifies k-th order convexity on [lo, hi] by the exact sign of the
/// (k+1)-th derivative on a rational grid. Brackets are candidate inflection
/// regions when order = 1.
ConvexityReport convexity_classify(const PowerPolynomial& poly, int order,
                                   const Rational& lo, const Rational& hi,
                                   const Rational& step = Rational(1, 128));

}  // namespace relpoly

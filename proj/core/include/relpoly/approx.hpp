#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relpoly/exact.hpp"
#include "relpoly/polyalg.hpp"

namespace relpoly {

/// One parabola a x^2 + b x + c with exact rational coefficients.
struct QuadraticPiece {
  Rational a, b, c;

  Rational operator()(const Rational& x) const { return (a * x + b) * x + c; }
  /// -b / (2a); requires a != 0.
  Rational vertex_abscissa() const;

  friend bool operator==(const QuadraticPiece&, const QuadraticPiece&) = default;
};

/// Unique parabola through three points with pairwise distinct abscissae.
QuadraticPiece solve_parabola(const std::pair<Rational, Rational>& p1,
                              const std::pair<Rational, Rational>& p2,
                              const std::pair<Rational, Rational>& p3);

/// Closed-form parabola through (l-1, 0), (s, N_s), (n-w+1, C(n,w-1)).
/// Identical to solve_parabola on those points for every admissible s.
QuadraticPiece step2_closed_form(int length, int width, int s, const BigInt& n_s);

/// Which coefficient anchors the left end of the parabola: the forced zero at
/// l-1, or the known value N_l at l (with the matching change of systems).
enum class AlgorithmVariant { LMinus1, L };

const char* variant_name(AlgorithmVariant v);
AlgorithmVariant variant_from_name(const std::string& name);

/// Piecewise approximant of one coefficient function: zero head, one parabola,
/// binomial chords on the tail.
struct SplineApproximant {
  int length = 0, width = 0, n = 0;
  QuadraticPiece piece;
  Rational parabola_start;  // l-1, or l for the variant anchored at N_l
  Rational start_value;     // value at parabola_start (0 or N_l)

  Rational operator()(const Rational& x) const;
};

struct ApproxInputs {
  AlgorithmVariant variant = AlgorithmVariant::LMinus1;
  int s = 0;              // primary interpolation index (default n-w)
  int t = 0;              // dual interpolation index (default n-l)
  BigInt anchor_s;        // N_s
  BigInt anchor_t;        // N'_t of the dual network
  BigInt anchor_l;        // N_l   (variant L only)
  BigInt anchor_w;        // N'_w  (variant L only)
};

/// Pulls the default anchors (s = n-w, t = n-l, plus N_l / N'_w for variant L)
/// out of a pair of exact coefficient vectors.
ApproxInputs default_inputs(int length, int width, const CoefficientVector& exact,
                            const CoefficientVector& exact_dual,
                            AlgorithmVariant variant);

enum class ClampFlag { None, Zeroed, ForcedBinomial };

struct ApproxResult {
  int length = 0, width = 0, n = 0;
  AlgorithmVariant variant = AlgorithmVariant::LMinus1;
  std::vector<Rational> adjusted;   // exact adjusted coefficients, before any rounding
  std::vector<ClampFlag> clamps;
  std::vector<bool> known;          // true where the coefficient is exact by type
  bool hypothesis_ok = false;       // anchor exceeds the binomial threshold
};

struct ApproxPair {
  ApproxResult primary;
  ApproxResult dual;
  QuadraticPiece piece;       // primary parabola
  QuadraticPiece piece_dual;  // dual parabola
  SplineApproximant spline;
  SplineApproximant spline_dual;
  ApproxInputs inputs;
  std::uint64_t operation_count = 0;  // loop-step instrumentation
};

/// Runs the full adjustment pipeline: splines, residual split, clamping.
/// Adjusted coefficients satisfy adjusted[k] + adjusted_dual[n-k] = C(n,k)
/// exactly for every k.
ApproxPair approximate_pair(int length, int width, const ApproxInputs& inputs);

/// N-form polynomials over the exact adjusted coefficients.
std::pair<NFormPolynomial, NFormPolynomial> approx_polynomials(const ApproxPair& pair);

struct ErrorBoundReport {
  BigInt m_value;              // max_k |N_k - N'_{n-k}|
  Rational discriminant;       // discriminant of the difference parabola
  bool vertex_term_defined = false;
  Rational vertex_term;        // |D / (4(a - a'))| when defined
  Rational bound;              // a-priori Chebyshev bound
};

ErrorBoundReport error_bound(int length, int width, const CoefficientVector& exact,
                             const CoefficientVector& exact_dual,
                             const QuadraticPiece& piece,
                             const QuadraticPiece& piece_dual);

/// Max |exact - approx| over a uniform grid with one golden-section refinement
/// pass around the grid maximizer.
double chebyshev_error(const NFormPolynomial& exact, const NFormPolynomial& approx,
                       int samples = 10000);

}  // namespace relpoly

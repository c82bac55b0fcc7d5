#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relpoly/approx.hpp"

namespace relpoly {

struct IntervalMembership {
  int argmax = 0;  // smallest index attaining the maximum coefficient
  Rational i1_lo, i1_hi;
  Rational i2_lo, i2_hi;
  bool in_i1 = false;
  bool in_i2 = false;
};

/// Index of the maximum coefficient against the two candidate windows
/// I1 = [(n-w+l)/2, (n-w+l)/2 + (n-w-l+2)/4] and I2 = [(n-w+l)/2, n-w+1/2].
IntervalMembership argmax_intervals(const CoefficientVector& cv, int length, int width);

/// Sufficient-condition quantity for the upper vertex bound:
/// E = N_s L^2 - C(n,w-1) L1 (3L - 2L1) with L = n-w+2-l, L1 = s-l+1.
BigInt compute_e(int length, int width, int s, const BigInt& n_s);

struct VertexReport {
  bool degenerate = false;  // a = 0: no vertex, bounds skipped
  Rational x_vertex;
  Rational lower_bound;    // (n-w+l)/2
  Rational upper_i1;       // lower_bound + (n-w-l+2)/4
  Rational upper_special;  // n-w+1/2
  BigInt e_value;
  bool hypothesis_ok = false;  // N_s > C(n,w-1)
  bool concave = false;        // a < 0
  bool lower_ok = false;
  bool upper_i1_ok = false;
  bool upper_special_ok = false;
  bool upper_i1_claimed = false;       // hypothesis_ok && e_value >= 0
  bool upper_special_claimed = false;  // hypothesis_ok && s == n-w
};

VertexReport vertex_analysis(int length, int width, int s, const BigInt& n_s,
                             const QuadraticPiece& piece);

struct ShapeCheck {
  std::string name;
  std::string statement;  // what the check asserts, in formula form
  bool pass = false;
  bool informational = false;  // reported but excluded from the aggregate
  std::string witness;
};

struct ShapeReport {
  bool complementarity_ok = false;
  bool log_concave_ok = false;
  IntervalMembership argmax;
  IntervalMembership argmax_dual;
  VertexReport vertex;
  VertexReport vertex_dual;
  std::map<int, bool> derivative_identities_ok;         // order -> exact identity
  std::map<int, bool> approx_derivative_identities_ok;  // order -> identity on ApRel
  bool inflection_pairing_ok = false;
  std::vector<ShapeCheck> checks;
  bool all_pass = false;
};

struct VerifyOptions {
  BruteForceOptions brute;
  AlgorithmVariant variant = AlgorithmVariant::LMinus1;
  Rational grid_step = Rational(1, 128);
  int max_derivative_order = 4;
};

/// Runs every shape check against brute-force ground truth for the network and
/// its dual, using precomputed approximation outputs.
ShapeReport verify_all(const MatchstickNetwork& net, const ApproxPair& pair,
                       const VerifyOptions& options = {});

/// Convenience overload: brute-forces the pair of vectors and derives the
/// default approximation inputs itself. Approximation-dependent checks are
/// skipped for degenerate dimensions (l < 2 or w < 2).
ShapeReport verify_all(const MatchstickNetwork& net, const VerifyOptions& options = {});

}  // namespace relpoly

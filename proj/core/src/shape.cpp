#include "relpoly/shape.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relpoly {

namespace {

std::string rat(const Rational& x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

IntervalMembership argmax_intervals(const CoefficientVector& cv, int length, int width) {
  const int n = length * width;
  if (cv.n != n)
    throw std::invalid_argument("argmax_intervals: vector does not match dimensions");
  IntervalMembership m;
  m.argmax = 0;
  for (int k = 1; k <= n; ++k)
    if (cv.at(k) > cv.at(m.argmax)) m.argmax = k;  // ties keep the smallest index
  m.i1_lo = Rational(n - width + length, 2);
  m.i1_hi = m.i1_lo + Rational(n - width - length + 2, 4);
  m.i2_lo = m.i1_lo;
  m.i2_hi = Rational(2 * (n - width) + 1, 2);
  const Rational a(m.argmax);
  m.in_i1 = m.i1_lo <= a && a <= m.i1_hi;
  m.in_i2 = m.i2_lo <= a && a <= m.i2_hi;
  return m;
}

BigInt compute_e(int length, int width, int s, const BigInt& n_s) {
  const int n = length * width;
  if (!(length - 1 < s && s <= n - width + 1))
    throw std::invalid_argument("compute_e: s must lie in (l-1, n-w+1]");
  const BigInt span = n - width + 2 - length;  // L(l-1; n-w+1)
  const BigInt left = s - length + 1;          // L(l-1; s)
  return n_s * span * span - binomial(n, width - 1) * left * (3 * span - 2 * left);
}

VertexReport vertex_analysis(int length, int width, int s, const BigInt& n_s,
                             const QuadraticPiece& piece) {
  const int n = length * width;
  VertexReport r;
  r.lower_bound = Rational(n - width + length, 2);
  r.upper_i1 = r.lower_bound + Rational(n - width - length + 2, 4);
  r.upper_special = Rational(2 * (n - width) + 1, 2);
  r.e_value = compute_e(length, width, s, n_s);
  r.hypothesis_ok = n_s > binomial(n, width - 1);
  if (piece.a == 0) {
    r.degenerate = true;
    return r;
  }
  r.concave = piece.a < 0;
  r.x_vertex = piece.vertex_abscissa();
  r.lower_ok = r.x_vertex >= r.lower_bound;
  r.upper_i1_ok = r.x_vertex <= r.upper_i1;
  r.upper_special_ok = r.x_vertex <= r.upper_special;
  r.upper_i1_claimed = r.hypothesis_ok && r.e_value >= 0;
  r.upper_special_claimed = r.hypothesis_ok && s == n - width;
  return r;
}

namespace {

struct CheckList {
  std::vector<ShapeCheck>& checks;

  bool add(std::string name, std::string statement, bool pass, std::string witness,
           bool informational = false) {
    checks.push_back({std::move(name), std::move(statement), pass, informational,
                      std::move(witness)});
    return pass;
  }
};

bool log_concave(const CoefficientVector& cv) {
  for (int k = 1; k + 1 <= cv.n; ++k) {
    if (cv.at(k - 1) > 0 && cv.at(k + 1) > 0 &&
        cv.at(k) * cv.at(k) < cv.at(k - 1) * cv.at(k + 1))
      return false;
  }
  return true;
}

bool property1_holds(const CoefficientVector& cv, int length, int width,
                     std::string& witness) {
  for (int k = 0; k <= cv.n; ++k) {
    const BigInt& v = cv.at(k);
    if (v < 0 || v > binomial(cv.n, k)) {
      witness = "N_" + std::to_string(k) + " outside [0, C(n,k)]";
      return false;
    }
    if (k <= length - 1 && v != 0) {
      witness = "N_" + std::to_string(k) + " != 0";
      return false;
    }
    if (k >= cv.n - width + 1 && v != binomial(cv.n, k)) {
      witness = "N_" + std::to_string(k) + " != C(n,k)";
      return false;
    }
  }
  witness = "all boundary values forced";
  return true;
}

// exact zero-polynomial test of d^k Rel(G;p) = (-1)^(k+1) d^k Rel(G';1-p)
bool derivative_identity(const PowerPolynomial& p, const PowerPolynomial& pd, int order) {
  PowerPolynomial lhs = derivative(p, order);
  PowerPolynomial rhs = compose_one_minus_p(derivative(pd, order));
  if (order % 2 == 0) rhs = scale(rhs, Rational(-1));
  return subtract(lhs, rhs).is_zero();
}

SignClass flip(SignClass s) {
  if (s == SignClass::Positive) return SignClass::Negative;
  if (s == SignClass::Negative) return SignClass::Positive;
  return SignClass::Zero;
}

bool brackets_pair_up(const ConvexityReport& a, const ConvexityReport& b) {
  for (const auto& br : a.brackets) {
    bool found = false;
    for (const auto& cand : b.brackets) {
      if (cand.lo == 1 - br.hi && cand.hi == 1 - br.lo &&
          cand.from == flip(br.to) && cand.to == flip(br.from)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

void vertex_checks(CheckList& list, const VertexReport& v, const std::string& tag,
                   int length, bool zero_anchored) {
  if (v.degenerate) {
    list.add("vertex_defined" + tag, "parabola is nondegenerate (A != 0)", false,
             "A = 0, vertex bounds skipped");
    return;
  }
  std::string at = "x_V = " + rat(v.x_vertex);
  // the bound properties are claimed for the system anchored at (l-1, 0) and
  // only under their hypotheses; otherwise the checks are reported as data
  bool lb_claimed = v.hypothesis_ok && length > 2 && zero_anchored;
  list.add("vertex_lower_bound" + tag, "x_V >= (n-w+l)/2 when N_s > C(n,w-1)",
           !lb_claimed || v.lower_ok, at + ", bound " + rat(v.lower_bound),
           !lb_claimed);
  bool ub_claimed = lb_claimed && v.upper_i1_claimed;
  list.add("vertex_upper_bound_i1" + tag,
           "x_V <= (n-w+l)/2 + (n-w-l+2)/4 when additionally E(l,w;s) >= 0",
           !ub_claimed || v.upper_i1_ok, at + ", bound " + rat(v.upper_i1),
           !ub_claimed);
  bool us_claimed = lb_claimed && v.upper_special_claimed;
  list.add("vertex_upper_bound_special" + tag,
           "x_V <= n-w+1/2 when s = n-w and N_s > C(n,w-1)",
           !us_claimed || v.upper_special_ok, at + ", bound " + rat(v.upper_special),
           !us_claimed);
}

}  // namespace

ShapeReport verify_all(const MatchstickNetwork& net, const ApproxPair& pair,
                       const VerifyOptions& options) {
  const int l = net.dims.length, w = net.dims.width, n = net.dims.size();
  ShapeReport report;
  CheckList list{report.checks};

  const CoefficientVector cv = brute_force_coefficients(net, options.brute);
  const CoefficientVector cvd = brute_force_coefficients(dual(net), options.brute);

  // complementarity N_k + N'_{n-k} = C(n,k)
  {
    bool ok = true;
    std::string witness = "all k";
    for (int k = 0; k <= n; ++k)
      if (cv.at(k) + cvd.at(n - k) != binomial(n, k)) {
        ok = false;
        witness = "fails at k = " + std::to_string(k);
        break;
      }
    report.complementarity_ok = list.add(
        "complementarity", "N_k + N'_{n-k} = C(n,k) for all k", ok, witness);
  }

  {
    std::string witness;
    bool ok = property1_holds(cv, l, w, witness);
    list.add("property1_boundaries", "N_k = 0 for k <= l-1, N_k = C(n,k) for k >= n-w+1",
             ok, witness);
    bool okd = property1_holds(cvd, w, l, witness);
    list.add("property1_boundaries_dual", "same boundary structure on the dual vector",
             okd, witness);
  }

  report.log_concave_ok =
      list.add("log_concavity", "N_k^2 >= N_{k-1} N_{k+1} on positive neighbours",
               log_concave(cv) && log_concave(cvd), "both vectors");

  {
    // coefficient function is concave at its peak
    auto peak_concave = [](const CoefficientVector& v, int argmax) {
      if (argmax == 0 || argmax == v.n) return true;
      return v.at(argmax - 1) - 2 * v.at(argmax) + v.at(argmax + 1) <= 0;
    };
    report.argmax = argmax_intervals(cv, l, w);
    report.argmax_dual = argmax_intervals(cvd, w, l);
    list.add("coefficient_function_peak_concavity",
             "second difference of F at its argmax is <= 0",
             peak_concave(cv, report.argmax.argmax) &&
                 peak_concave(cvd, report.argmax_dual.argmax),
             "argmax " + std::to_string(report.argmax.argmax) + " / " +
                 std::to_string(report.argmax_dual.argmax));
    // membership of the argmax in the empirical windows; observational only
    list.add("argmax_in_i1", "argmax(F) in I1", report.argmax.in_i1,
             "argmax " + std::to_string(report.argmax.argmax) + ", I1 = [" +
                 rat(report.argmax.i1_lo) + ", " + rat(report.argmax.i1_hi) + "]",
             true);
    list.add("argmax_in_i2", "argmax(F) in I2", report.argmax.in_i2,
             "argmax " + std::to_string(report.argmax.argmax) + ", I2 = [" +
                 rat(report.argmax.i2_lo) + ", " + rat(report.argmax.i2_hi) + "]",
             true);
  }

  {
    bool ok = true;
    std::string witness = "all k";
    for (int k = 0; k <= n && ok; ++k) {
      auto [lo, hi] = coefficient_bounds(l, w, k);
      if (cv.at(k) < lo || cv.at(k) > hi) {
        ok = false;
        witness = "fails at k = " + std::to_string(k);
      }
    }
    list.add("coefficient_sandwich", "PoS(l,w) <= N_k <= SoP(l,w) entrywise", ok,
             witness);
  }

  if (net.label.rfind("PoS", 0) == 0) {
    // window claimed for parallel-of-series networks; empirical, not aggregated
    Rational lo(n, 2), hi(2 * (n - w) + 1, 2);
    bool ok = lo <= report.argmax.argmax && Rational(report.argmax.argmax) <= hi;
    list.add("pos_argmax_window", "PoS argmax in [n/2, n-w+1/2]", ok,
             "argmax " + std::to_string(report.argmax.argmax) + " in [" + rat(lo) +
                 ", " + rat(hi) + "]",
             true);
  }

  // exact polynomial identities
  const NFormPolynomial nf = NFormPolynomial::from_counts(cv);
  const NFormPolynomial nfd = NFormPolynomial::from_counts(cvd);
  const PowerPolynomial p = to_power_basis(nf);
  const PowerPolynomial pd = to_power_basis(nfd);

  {
    PowerPolynomial sum = add(p, compose_one_minus_p(pd));
    PowerPolynomial one(std::vector<Rational>{Rational(1)});
    list.add("complementarity_polynomial", "Rel(G;p) + Rel(G';1-p) = 1",
             subtract(sum, one).is_zero(), "zero polynomial");
  }

  for (int k = 1; k <= options.max_derivative_order; ++k) {
    bool ok = derivative_identity(p, pd, k);
    report.derivative_identities_ok[k] = ok;
    list.add("derivative_identity_k" + std::to_string(k),
             "d^k Rel(G;p) = (-1)^(k+1) d^k Rel(G';1-p)", ok, "zero polynomial");
  }

  {
    const Rational half(1, 2);
    bool odd_ok = true, even_ok = true;
    for (int k = 1; k <= options.max_derivative_order; ++k) {
      Rational a = derivative(p, k)(half);
      Rational b = derivative(pd, k)(half);
      if (k % 2 == 1 && a != b) odd_ok = false;
      if (k % 2 == 0 && a != -b) even_ok = false;
    }
    list.add("odd_derivatives_equal_at_half",
             "odd-order derivatives of the dual pair agree at p = 1/2", odd_ok, "");
    list.add("even_derivatives_opposite_at_half",
             "even-order derivatives of the dual pair are negatives at p = 1/2",
             even_ok, "");
  }

  {
    ConvexityReport ca = convexity_classify(p, 1, Rational(0), Rational(1),
                                            options.grid_step);
    ConvexityReport cb = convexity_classify(pd, 1, Rational(0), Rational(1),
                                            options.grid_step);
    bool ok = brackets_pair_up(ca, cb) && brackets_pair_up(cb, ca);
    if (!ok) {
      // refine once before declaring failure
      ca = convexity_classify(p, 1, Rational(0), Rational(1), options.grid_step / 2);
      cb = convexity_classify(pd, 1, Rational(0), Rational(1), options.grid_step / 2);
      ok = brackets_pair_up(ca, cb) && brackets_pair_up(cb, ca);
    }
    report.inflection_pairing_ok =
        list.add("inflection_pairing",
                 "every inflection bracket of Rel(G) mirrors to one of Rel(G')", ok,
                 std::to_string(ca.brackets.size()) + " bracket(s)");
  }

  {
    // convexity next to the origin; the radius is not quantified a priori, so
    // the witness reports the first constant-sign run of the second derivative
    auto near_origin = [&](const PowerPolynomial& poly, int length,
                           const std::string& tag) {
      ConvexityReport c =
          convexity_classify(poly, 1, Rational(0), Rational(1), options.grid_step);
      const SignRun* first = nullptr;
      for (const auto& run : c.runs)
        if (run.sign != SignClass::Zero) {
          first = &run;
          break;
        }
      bool ok = first != nullptr && first->sign == SignClass::Positive;
      std::string witness = first
          ? "second derivative positive on (0, " + rat(first->hi) + "]"
          : "second derivative identically zero";
      list.add("convex_near_origin" + tag,
               "Rel is first-order convex in a neighbourhood of p = 0 (l >= 3)", ok,
               witness, length < 3);
    };
    near_origin(p, l, "");
    near_origin(pd, w, "_dual");
  }

  // approximation-dependent checks
  {
    report.vertex = vertex_analysis(l, w, pair.inputs.s, pair.inputs.anchor_s,
                                    pair.piece);
    report.vertex_dual = vertex_analysis(w, l, pair.inputs.t, pair.inputs.anchor_t,
                                         pair.piece_dual);
    const bool zero_anchored =
        pair.inputs.variant == AlgorithmVariant::LMinus1;
    vertex_checks(list, report.vertex, "", l, zero_anchored);
    vertex_checks(list, report.vertex_dual, "_dual", w, zero_anchored);

    auto [ap, apd] = approx_polynomials(pair);
    {
      bool ok = true;
      for (int k = 0; k <= n; ++k)
        if (pair.primary.adjusted[static_cast<std::size_t>(k)] +
                pair.dual.adjusted[static_cast<std::size_t>(n - k)] !=
            binomial(n, k)) {
          ok = false;
          break;
        }
      list.add("approx_complementarity",
               "adjusted coefficients satisfy the complementarity identity exactly",
               ok, "pre-rounding rationals");
    }
    const PowerPolynomial app = to_power_basis(ap);
    const PowerPolynomial appd = to_power_basis(apd);
    {
      PowerPolynomial sum = add(app, compose_one_minus_p(appd));
      PowerPolynomial one(std::vector<Rational>{Rational(1)});
      list.add("approx_complementarity_polynomial", "ApRel(G;p) + ApRel(G';1-p) = 1",
               subtract(sum, one).is_zero(), "zero polynomial");
    }
    for (int k = 1; k <= std::min(options.max_derivative_order, 3); ++k) {
      bool ok = derivative_identity(app, appd, k);
      report.approx_derivative_identities_ok[k] = ok;
      list.add("approx_derivative_identity_k" + std::to_string(k),
               "d^k ApRel(G;p) = (-1)^(k+1) d^k ApRel(G';1-p)", ok, "zero polynomial");
    }
  }

  report.all_pass = true;
  for (const auto& c : report.checks)
    if (!c.informational && !c.pass) report.all_pass = false;
  return report;
}

ShapeReport verify_all(const MatchstickNetwork& net, const VerifyOptions& options) {
  const int l = net.dims.length, w = net.dims.width;
  const CoefficientVector cv = brute_force_coefficients(net, options.brute);
  const CoefficientVector cvd = brute_force_coefficients(dual(net), options.brute);
  if (l >= 2 && w >= 2 &&
      (options.variant == AlgorithmVariant::LMinus1 ||
       (l < l * w - w && w < l * w - l))) {
    ApproxInputs inputs = default_inputs(l, w, cv, cvd, options.variant);
    return verify_all(net, approximate_pair(l, w, inputs), options);
  }

  // degenerate dimensions: only the approximation-free checks apply
  ShapeReport report;
  CheckList list{report.checks};
  const int n = net.dims.size();
  bool ok = true;
  std::string witness = "all k";
  for (int k = 0; k <= n; ++k)
    if (cv.at(k) + cvd.at(n - k) != binomial(n, k)) {
      ok = false;
      witness = "fails at k = " + std::to_string(k);
      break;
    }
  report.complementarity_ok =
      list.add("complementarity", "N_k + N'_{n-k} = C(n,k) for all k", ok, witness);
  report.log_concave_ok =
      list.add("log_concavity", "N_k^2 >= N_{k-1} N_{k+1} on positive neighbours",
               log_concave(cv) && log_concave(cvd), "both vectors");
  report.argmax = argmax_intervals(cv, l, w);
  report.argmax_dual = argmax_intervals(cvd, w, l);
  const NFormPolynomial nf = NFormPolynomial::from_counts(cv);
  const NFormPolynomial nfd = NFormPolynomial::from_counts(cvd);
  const PowerPolynomial p = to_power_basis(nf);
  const PowerPolynomial pd = to_power_basis(nfd);
  for (int k = 1; k <= options.max_derivative_order; ++k) {
    bool idok = derivative_identity(p, pd, k);
    report.derivative_identities_ok[k] = idok;
    list.add("derivative_identity_k" + std::to_string(k),
             "d^k Rel(G;p) = (-1)^(k+1) d^k Rel(G';1-p)", idok, "zero polynomial");
  }
  report.all_pass = true;
  for (const auto& c : report.checks)
    if (!c.informational && !c.pass) report.all_pass = false;
  return report;
}

}  // namespace relpoly

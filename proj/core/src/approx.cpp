#include "relpoly/approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relpoly {

Rational QuadraticPiece::vertex_abscissa() const {
  if (a == 0) throw std::domain_error("vertex of a degenerate parabola");
  return -b / (2 * a);
}

QuadraticPiece solve_parabola(const std::pair<Rational, Rational>& p1,
                              const std::pair<Rational, Rational>& p2,
                              const std::pair<Rational, Rational>& p3) {
  const auto& [x1, y1] = p1;
  const auto& [x2, y2] = p2;
  const auto& [x3, y3] = p3;
  if (x1 == x2 || x1 == x3 || x2 == x3)
    throw std::invalid_argument("solve_parabola: abscissae must be pairwise distinct");
  const Rational d1 = (x1 - x2) * (x1 - x3);
  const Rational d2 = (x2 - x1) * (x2 - x3);
  const Rational d3 = (x3 - x1) * (x3 - x2);
  QuadraticPiece q;
  q.a = y1 / d1 + y2 / d2 + y3 / d3;
  q.b = -(y1 * (x2 + x3) / d1 + y2 * (x1 + x3) / d2 + y3 * (x1 + x2) / d3);
  q.c = y1 * x2 * x3 / d1 + y2 * x1 * x3 / d2 + y3 * x1 * x2 / d3;
  return q;
}

QuadraticPiece step2_closed_form(int length, int width, int s, const BigInt& n_s) {
  const int l = length, w = width, n = l * w;
  if (!(l - 1 < s && s < n - w + 1))
    throw std::invalid_argument("step2_closed_form: s must lie strictly between l-1 and n-w+1");
  const BigInt q = binomial(n, w - 1);
  const BigInt u = s - l + 1;          // L(l-1; s)
  const BigInt v = n - w + 1 - s;      // L(s; n-w+1)
  const BigInt span1 = n - w - l + 2;  // L(l-1; n-w+1)
  const Rational denom = Rational(u * v * span1);
  QuadraticPiece out;
  out.a = Rational(q * u - n_s * span1) / denom;
  out.b = Rational(n_s * span1 * (n - w + l) - q * u * (s + l - 1)) / denom;
  out.c = Rational((l - 1) * (q * s * u - n_s * (n - w + 1) * span1)) / denom;
  return out;
}

const char* variant_name(AlgorithmVariant v) {
  return v == AlgorithmVariant::LMinus1 ? "lminus1" : "l";
}

AlgorithmVariant variant_from_name(const std::string& name) {
  if (name == "lminus1") return AlgorithmVariant::LMinus1;
  if (name == "l") return AlgorithmVariant::L;
  throw std::invalid_argument("unknown variant '" + name + "' (expected lminus1 or l)");
}

Rational SplineApproximant::operator()(const Rational& x) const {
  if (x < 0 || x > n) throw std::invalid_argument("spline evaluated outside [0, n]");
  const int head = length - 1;
  if (x <= head) return Rational(0);
  if (x <= parabola_start) {
    // bridge chord from (l-1, 0) up to the parabola anchor (variant L only)
    return start_value * (x - head) / (parabola_start - head);
  }
  if (x <= n - width + 1) return piece(x);
  BigInt kf = floor_rational(x);
  int k = kf.convert_to<int>();
  if (Rational(k) != x) ++k;  // x in (k-1, k]
  Rational hi(binomial(n, k)), lo(binomial(n, k - 1));
  return (hi - lo) * x + k * lo - (k - 1) * hi;
}

ApproxInputs default_inputs(int length, int width, const CoefficientVector& exact,
                            const CoefficientVector& exact_dual,
                            AlgorithmVariant variant) {
  const int n = length * width;
  if (exact.n != n || exact_dual.n != n)
    throw std::invalid_argument("default_inputs: vectors do not match the dimensions");
  ApproxInputs in;
  in.variant = variant;
  in.s = n - width;
  in.t = n - length;
  in.anchor_s = exact.at(in.s);
  in.anchor_t = exact_dual.at(in.t);
  if (variant == AlgorithmVariant::L) {
    in.anchor_l = exact.at(length);
    in.anchor_w = exact_dual.at(width);
  }
  return in;
}

namespace {

SplineApproximant make_spline(int length, int width, const QuadraticPiece& piece,
                              AlgorithmVariant variant, const BigInt& anchor_at_l) {
  SplineApproximant f;
  f.length = length;
  f.width = width;
  f.n = length * width;
  f.piece = piece;
  if (variant == AlgorithmVariant::LMinus1) {
    f.parabola_start = length - 1;
    f.start_value = 0;
  } else {
    f.parabola_start = length;
    f.start_value = Rational(anchor_at_l);
  }
  return f;
}

}  // namespace

ApproxPair approximate_pair(int length, int width, const ApproxInputs& inputs) {
  const int l = length, w = width, n = l * w;
  if (l < 2 || w < 2)
    throw std::invalid_argument("approximate_pair: requires l >= 2 and w >= 2");

  ApproxPair pair;
  pair.inputs = inputs;
  const BigInt q_primary = binomial(n, w - 1);
  const BigInt q_dual = binomial(n, l - 1);

  if (inputs.variant == AlgorithmVariant::LMinus1) {
    // degenerate interpolation systems are rejected by the parabola solvers
    pair.piece = step2_closed_form(l, w, inputs.s, inputs.anchor_s);
    pair.piece_dual = step2_closed_form(w, l, inputs.t, inputs.anchor_t);
  } else {
    if (l >= n - w || w >= n - l)
      throw std::invalid_argument("approximate_pair: variant l needs l < n-w and w < n-l");
    pair.piece = solve_parabola({Rational(l), Rational(inputs.anchor_l)},
                                {Rational(n - w), Rational(inputs.anchor_s)},
                                {Rational(n - w + 1), Rational(q_primary)});
    pair.piece_dual = solve_parabola({Rational(w), Rational(inputs.anchor_w)},
                                     {Rational(n - l), Rational(inputs.anchor_t)},
                                     {Rational(n - l + 1), Rational(q_dual)});
  }
  pair.spline = make_spline(l, w, pair.piece, inputs.variant, inputs.anchor_l);
  pair.spline_dual = make_spline(w, l, pair.piece_dual, inputs.variant, inputs.anchor_w);

  auto init = [&](ApproxResult& r, int rl, int rw, bool hyp) {
    r.length = rl;
    r.width = rw;
    r.n = n;
    r.variant = inputs.variant;
    r.adjusted.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    r.clamps.assign(static_cast<std::size_t>(n) + 1, ClampFlag::None);
    r.known.assign(static_cast<std::size_t>(n) + 1, false);
    r.hypothesis_ok = hyp;
  };
  init(pair.primary, l, w, inputs.anchor_s > q_primary);
  init(pair.dual, w, l, inputs.anchor_t > q_dual);

  std::uint64_t ops = 0;
  for (int k = 0; k <= n; ++k) {
    ++ops;
    Rational& nk = pair.primary.adjusted[static_cast<std::size_t>(k)];
    Rational& dk = pair.dual.adjusted[static_cast<std::size_t>(n - k)];
    if (k <= l - 1) {
      // both ends of the pair are known exactly; their sum is C(n,k) already
      nk = 0;
      dk = Rational(binomial(n, n - k));
      pair.primary.known[static_cast<std::size_t>(k)] = true;
      pair.dual.known[static_cast<std::size_t>(n - k)] = true;
    } else if (k >= n - w + 1) {
      nk = Rational(binomial(n, k));
      dk = 0;
      pair.primary.known[static_cast<std::size_t>(k)] = true;
      pair.dual.known[static_cast<std::size_t>(n - k)] = true;
    } else {
      const Rational fk = pair.spline(Rational(k));
      const Rational fdk = pair.spline_dual(Rational(n - k));
      const Rational delta = Rational(binomial(n, k)) - fk - fdk;
      nk = fk + delta / 2;
      dk = fdk + delta / 2;
      ops += 2;
    }
  }

  if (inputs.variant == AlgorithmVariant::L) {
    // anchor cells keep their input value whenever the residual vanished there
    auto mark = [](ApproxResult& r, int k, const BigInt& anchor) {
      if (r.adjusted[static_cast<std::size_t>(k)] == anchor)
        r.known[static_cast<std::size_t>(k)] = true;
    };
    mark(pair.primary, l, inputs.anchor_l);
    mark(pair.primary, n - w, inputs.anchor_s);
    mark(pair.dual, w, inputs.anchor_w);
    mark(pair.dual, n - l, inputs.anchor_t);
  }

  // negative coefficients are zeroed; the partner absorbs the full binomial so
  // the pair sum stays exact
  for (int k = 0; k <= n; ++k) {
    ++ops;
    Rational& nk = pair.primary.adjusted[static_cast<std::size_t>(k)];
    Rational& dk = pair.dual.adjusted[static_cast<std::size_t>(n - k)];
    if (nk < 0) {
      nk = 0;
      dk = Rational(binomial(n, k));
      pair.primary.clamps[static_cast<std::size_t>(k)] = ClampFlag::Zeroed;
      pair.dual.clamps[static_cast<std::size_t>(n - k)] = ClampFlag::ForcedBinomial;
    } else if (dk < 0) {
      dk = 0;
      nk = Rational(binomial(n, k));
      pair.dual.clamps[static_cast<std::size_t>(n - k)] = ClampFlag::Zeroed;
      pair.primary.clamps[static_cast<std::size_t>(k)] = ClampFlag::ForcedBinomial;
    }
  }
  pair.operation_count = ops;
  return pair;
}

std::pair<NFormPolynomial, NFormPolynomial> approx_polynomials(const ApproxPair& pair) {
  NFormPolynomial p, d;
  p.n = pair.primary.n;
  p.coeffs = pair.primary.adjusted;
  d.n = pair.dual.n;
  d.coeffs = pair.dual.adjusted;
  return {std::move(p), std::move(d)};
}

ErrorBoundReport error_bound(int length, int width, const CoefficientVector& exact,
                             const CoefficientVector& exact_dual,
                             const QuadraticPiece& piece,
                             const QuadraticPiece& piece_dual) {
  const int n = length * width;
  ErrorBoundReport report;
  report.m_value = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt diff = exact.at(k) - exact_dual.at(n - k);
    if (diff < 0) diff = -diff;
    report.m_value = std::max(report.m_value, diff);
  }
  // difference g(x) = f(x) - f_dual(n - x) restricted to the parabola branches
  const Rational a = piece.a - piece_dual.a;
  const Rational b = piece.b + piece_dual.b + 2 * n * piece_dual.a;
  const Rational c = piece.c - piece_dual.c - piece_dual.b * n - piece_dual.a * n * n;
  report.discriminant = b * b - 4 * a * c;
  Rational peak = std::max(Rational(binomial(n, length - 1)),
                           Rational(binomial(n, width - 1)));
  if (a != 0) {
    report.vertex_term_defined = true;
    report.vertex_term = report.discriminant / (4 * a);
    if (report.vertex_term < 0) report.vertex_term = -report.vertex_term;
    peak = std::max(peak, report.vertex_term);
  }
  Rational scale = Rational(n - length - width);
  Rational pow2 = 1;
  for (int i = 0; i <= n; ++i) pow2 *= 2;
  report.bound = scale / pow2 * (Rational(report.m_value) + peak);
  return report;
}

double chebyshev_error(const NFormPolynomial& exact, const NFormPolynomial& approx,
                       int samples) {
  if (exact.n != approx.n)
    throw std::invalid_argument("chebyshev_error: polynomials of different type");
  if (samples < 2) throw std::invalid_argument("chebyshev_error: need at least 2 samples");
  const int n = exact.n;
  std::vector<double> diff(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    diff[static_cast<std::size_t>(k)] =
        to_double(exact.coeffs[static_cast<std::size_t>(k)] -
                  approx.coeffs[static_cast<std::size_t>(k)]);
  auto gap = [&](double p) {
    // N-form evaluation; all weights nonnegative, so this is stable
    double acc = 0.0, ppow = 1.0;
    std::vector<double> qpow(static_cast<std::size_t>(n) + 1);
    qpow[0] = 1.0;
    for (int i = 1; i <= n; ++i) qpow[static_cast<std::size_t>(i)] =
        qpow[static_cast<std::size_t>(i - 1)] * (1.0 - p);
    for (int k = 0; k <= n; ++k) {
      acc += diff[static_cast<std::size_t>(k)] * ppow * qpow[static_cast<std::size_t>(n - k)];
      ppow *= p;
    }
    return std::fabs(acc);
  };

  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i < samples; ++i) {
    double p = static_cast<double>(i) / (samples - 1);
    double v = gap(p);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // one golden-section pass on the bracketing interval around the maximizer
  double lo = std::max(0.0, (best_i - 1.0) / (samples - 1));
  double hi = std::min(1.0, (best_i + 1.0) / (samples - 1));
  const double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = gap(x1), f2 = gap(x2);
  for (int iter = 0; iter < 80; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = gap(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = gap(x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

}  // namespace relpoly

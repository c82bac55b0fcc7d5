#include "relpoly/polyalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace relpoly {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

SignClass sign_of(const Rational& v) {
  if (v > 0) return SignClass::Positive;
  if (v < 0) return SignClass::Negative;
  return SignClass::Zero;
}

}  // namespace

NFormPolynomial NFormPolynomial::from_counts(const CoefficientVector& cv) {
  NFormPolynomial out;
  out.n = cv.n;
  out.coeffs.reserve(cv.counts.size());
  for (const auto& c : cv.counts) out.coeffs.emplace_back(c);
  return out;
}

Rational nform_eval(const NFormPolynomial& poly, const Rational& p) {
  const Rational q = 1 - p;
  // powers of q descending alongside powers of p ascending
  std::vector<Rational> qpow(static_cast<std::size_t>(poly.n) + 1);
  qpow[0] = 1;
  for (int i = 1; i <= poly.n; ++i) qpow[i] = qpow[i - 1] * q;
  Rational acc = 0, ppow = 1;
  for (int k = 0; k <= poly.n; ++k) {
    if (poly.coeffs[static_cast<std::size_t>(k)] != 0)
      acc += poly.coeffs[static_cast<std::size_t>(k)] * ppow *
             qpow[static_cast<std::size_t>(poly.n - k)];
    ppow *= p;
  }
  return acc;
}

PowerPolynomial::PowerPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Rational PowerPolynomial::operator()(const Rational& p) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

PowerPolynomial to_power_basis(const NFormPolynomial& poly) {
  std::vector<Rational> out(static_cast<std::size_t>(poly.n) + 1, Rational(0));
  for (int k = 0; k <= poly.n; ++k) {
    const Rational& c = poly.coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const int m = poly.n - k;
    // c * p^k (1-p)^m = c * sum_i (-1)^i C(m,i) p^(k+i)
    for (int i = 0; i <= m; ++i) {
      Rational term = c * binomial(m, i);
      out[static_cast<std::size_t>(k + i)] += (i % 2 == 0) ? term : -term;
    }
  }
  return PowerPolynomial(std::move(out));
}

PowerPolynomial derivative(const PowerPolynomial& poly, int order) {
  if (order < 0) throw std::invalid_argument("derivative: negative order");
  if (order == 0) return poly;
  if (order > poly.degree()) return PowerPolynomial{};
  const auto& c = poly.coeffs();
  std::vector<Rational> out(c.size() - static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < out.size(); ++i) {
    BigInt fall = 1;
    for (int j = 0; j < order; ++j) fall *= static_cast<int>(i) + order - j;
    out[i] = c[i + static_cast<std::size_t>(order)] * Rational(fall);
  }
  return PowerPolynomial(std::move(out));
}

PowerPolynomial add(const PowerPolynomial& a, const PowerPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] += b.coeffs()[i];
  return PowerPolynomial(std::move(out));
}

PowerPolynomial subtract(const PowerPolynomial& a, const PowerPolynomial& b) {
  return add(a, scale(b, Rational(-1)));
}

PowerPolynomial scale(const PowerPolynomial& a, const Rational& factor) {
  std::vector<Rational> out = a.coeffs();
  for (auto& c : out) c *= factor;
  return PowerPolynomial(std::move(out));
}

PowerPolynomial compose_one_minus_p(const PowerPolynomial& poly) {
  const auto& c = poly.coeffs();
  std::vector<Rational> out(c.size(), Rational(0));
  // (1-p)^i contributes (-1)^j C(i,j) to the p^j coefficient.
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      Rational term = c[i] * binomial(static_cast<int>(i), static_cast<int>(j));
      out[j] += (j % 2 == 0) ? term : -term;
    }
  }
  return PowerPolynomial(std::move(out));
}

Rational coeff_function_eval(const CoefficientVector& cv, const Rational& x) {
  if (x < 0 || x > cv.n)
    throw std::invalid_argument("coeff_function_eval: x outside [0, n]");
  if (x == 0) return Rational(cv.at(0));
  BigInt kf = floor_rational(x);
  int k = kf.convert_to<int>();
  if (Rational(k) == x) return Rational(cv.at(k));
  ++k;  // x in (k-1, k)
  Rational nk(cv.at(k)), nk1(cv.at(k - 1));
  return (nk - nk1) * x + k * nk1 - (k - 1) * nk;
}

Rational divided_difference(const std::vector<Rational>& xs,
                            const std::vector<Rational>& values) {
  if (xs.empty() || xs.size() != values.size())
    throw std::invalid_argument("divided_difference: need equally many points and values");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1] < xs[i]))
      throw std::invalid_argument("divided_difference: points must be strictly increasing");
  std::vector<Rational> table = values;
  for (std::size_t level = 1; level < xs.size(); ++level)
    for (std::size_t i = 0; i + level < xs.size(); ++i)
      table[i] = (table[i + 1] - table[i]) / (xs[i + level] - xs[i]);
  return table[0];
}

ConvexityReport convexity_classify(const PowerPolynomial& poly, int order,
                                   const Rational& lo, const Rational& hi,
                                   const Rational& step) {
  if (!(lo < hi)) throw std::invalid_argument("convexity_classify: need lo < hi");
  if (!(step > 0)) throw std::invalid_argument("convexity_classify: need step > 0");
  const PowerPolynomial d = derivative(poly, order + 1);

  ConvexityReport report;
  report.order = order;

  Rational x = lo;
  SignClass current = sign_of(d(x));
  Rational run_start = x;
  Rational last_x = x;
  SignClass last_nonzero = current;
  Rational last_nonzero_x = x;

  while (x < hi) {
    x += step;
    if (x > hi) x = hi;
    SignClass s = sign_of(d(x));
    if (s != current) {
      report.runs.push_back({run_start, last_x, current});
      run_start = x;
      current = s;
    }
    if (s != SignClass::Zero) {
      if (last_nonzero != SignClass::Zero && s != last_nonzero)
        report.brackets.push_back({last_nonzero_x, x, last_nonzero, s});
      last_nonzero = s;
      last_nonzero_x = x;
    }
    last_x = x;
  }
  report.runs.push_back({run_start, last_x, current});
  return report;
}

}  // namespace relpoly

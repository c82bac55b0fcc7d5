#include "relpoly/numeric.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace relpoly {

namespace {

std::mutex binomial_mutex;
std::unordered_map<int, std::vector<BigInt>> binomial_rows;
const BigInt zero_value{0};

const std::vector<BigInt>& binomial_row(int n) {
  std::lock_guard<std::mutex> lock(binomial_mutex);
  auto it = binomial_rows.find(n);
  if (it != binomial_rows.end()) return it->second;
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  // C(n,k) = C(n,k-1) * (n-k+1) / k, exact at every step.
  for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return binomial_rows.emplace(n, std::move(row)).first->second;
}

}  // namespace

const BigInt& binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return zero_value;
  return binomial_row(n)[static_cast<std::size_t>(k)];
}

BigInt floor_rational(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string rational_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: malformed value '" + text + "'");
  }
}

std::string format_double12(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(12);
  out << value;
  return out.str();
}

}  // namespace relpoly

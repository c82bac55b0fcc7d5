#pragma once

#include <string>
#include <vector>

#include "relpoly/approx.hpp"
#include "relpoly/shape.hpp"

namespace relpoly {

/// Exact decimal-string JSON array: {"n": ..., "label": ..., "N": ["0", ...]},
/// optionally with the power-basis form attached under "power".
std::string coefficients_to_json(const CoefficientVector& cv,
                                 const std::string& label = "",
                                 const PowerPolynomial* power = nullptr);
CoefficientVector coefficients_from_json(const std::string& text);

/// CSV rows "k,N_k" with a header line.
std::string coefficients_to_csv(const CoefficientVector& cv);

/// Power-basis polynomial as a JSON array of "num/den" strings.
std::string power_poly_to_json(const PowerPolynomial& poly);
PowerPolynomial power_poly_from_json(const std::string& text);

struct ApproxReportData {
  const ApproxPair& pair;
  Rational error_bound_value;
  Rational error_bound_value_dual;
  double measured_error = 0.0;
  double measured_error_dual = 0.0;
};

std::string approx_to_json(const ApproxReportData& data);

/// Floored coefficient rows in the layout of the published table: exact rows
/// followed by adjusted rows, '*' marking cells that are known exactly.
std::string approx_to_csv(const ApproxPair& pair, const CoefficientVector* exact,
                          const CoefficientVector* exact_dual);

std::string shape_report_to_json(const ShapeReport& report);

struct PlotOptions {
  int samples = 513;
  std::vector<int> derivative_orders;
};

/// CSV of p, Rel(G;p), Rel(G';1-p), ApRel(G;p), ApRel(G';1-p) plus derivative
/// columns for each requested order; 12 significant digits throughout.
std::string plot_data_csv(const CoefficientVector& exact,
                          const CoefficientVector& exact_dual,
                          const ApproxPair& pair, const PlotOptions& options);

}  // namespace relpoly

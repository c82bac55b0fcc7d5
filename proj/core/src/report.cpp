#include "relpoly/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace relpoly {

using nlohmann::json;

std::string coefficients_to_json(const CoefficientVector& cv, const std::string& label,
                                 const PowerPolynomial* power) {
  json j;
  j["n"] = cv.n;
  if (!label.empty()) j["label"] = label;
  json arr = json::array();
  for (const auto& v : cv.counts) arr.push_back(v.str());
  j["N"] = arr;
  if (power) {
    json parr = json::array();
    for (const auto& c : power->coeffs()) parr.push_back(rational_string(c));
    j["power"] = parr;
  }
  return j.dump(2);
}

CoefficientVector coefficients_from_json(const std::string& text) {
  json j = json::parse(text);
  CoefficientVector cv;
  cv.n = j.at("n").get<int>();
  for (const auto& item : j.at("N")) cv.counts.emplace_back(item.get<std::string>());
  if (cv.counts.size() != static_cast<std::size_t>(cv.n) + 1)
    throw std::runtime_error("coefficient JSON: expected n+1 entries");
  return cv;
}

std::string coefficients_to_csv(const CoefficientVector& cv) {
  std::ostringstream out;
  out << "k,N_k\n";
  for (int k = 0; k <= cv.n; ++k) out << k << ',' << cv.at(k).str() << '\n';
  return out.str();
}

std::string power_poly_to_json(const PowerPolynomial& poly) {
  json arr = json::array();
  for (const auto& c : poly.coeffs()) arr.push_back(rational_string(c));
  return arr.dump();
}

PowerPolynomial power_poly_from_json(const std::string& text) {
  json arr = json::parse(text);
  std::vector<Rational> coeffs;
  for (const auto& item : arr) coeffs.push_back(parse_rational(item.get<std::string>()));
  return PowerPolynomial(std::move(coeffs));
}

namespace {

const char* clamp_name(ClampFlag f) {
  switch (f) {
    case ClampFlag::Zeroed: return "zeroed";
    case ClampFlag::ForcedBinomial: return "forced-binomial";
    default: return "none";
  }
}

json result_to_json(const ApproxResult& r) {
  json j;
  j["l"] = r.length;
  j["w"] = r.width;
  json nt = json::array(), clamped = json::array(), floored = json::array();
  for (int k = 0; k <= r.n; ++k) {
    nt.push_back(rational_string(r.adjusted[static_cast<std::size_t>(k)]));
    clamped.push_back(clamp_name(r.clamps[static_cast<std::size_t>(k)]));
    floored.push_back(floor_rational(r.adjusted[static_cast<std::size_t>(k)]).str());
  }
  j["N_tilde"] = nt;
  j["N_tilde_floored"] = floored;
  j["clamped"] = clamped;
  j["hypothesis_ok"] = r.hypothesis_ok;
  return j;
}

}  // namespace

std::string approx_to_json(const ApproxReportData& data) {
  const ApproxPair& pair = data.pair;
  json j;
  j["l"] = pair.primary.length;
  j["w"] = pair.primary.width;
  j["variant"] = variant_name(pair.inputs.variant);
  j["inputs"] = {{"s", pair.inputs.s},
                 {"t", pair.inputs.t},
                 {"N_s", pair.inputs.anchor_s.str()},
                 {"N_t_dual", pair.inputs.anchor_t.str()}};
  if (pair.inputs.variant == AlgorithmVariant::L) {
    j["inputs"]["N_l"] = pair.inputs.anchor_l.str();
    j["inputs"]["N_w_dual"] = pair.inputs.anchor_w.str();
  }
  j["primary"] = result_to_json(pair.primary);
  j["dual"] = result_to_json(pair.dual);
  j["error_bound"] = format_double12(to_double(data.error_bound_value));
  j["error_bound_dual"] = format_double12(to_double(data.error_bound_value_dual));
  j["measured_error"] = format_double12(data.measured_error);
  j["measured_error_dual"] = format_double12(data.measured_error_dual);
  return j.dump(2);
}

std::string approx_to_csv(const ApproxPair& pair, const CoefficientVector* exact,
                          const CoefficientVector* exact_dual) {
  const int n = pair.primary.n;
  std::ostringstream out;
  out << "row";
  for (int k = 0; k <= n; ++k) out << ",k=" << k;
  out << '\n';
  auto known_row = [&](const ApproxResult& r, const char* name) {
    out << name;
    for (int k = 0; k <= n; ++k) {
      out << ',' << floor_rational(r.adjusted[static_cast<std::size_t>(k)]).str();
      if (r.known[static_cast<std::size_t>(k)]) out << '*';
    }
    out << '\n';
  };
  auto exact_row = [&](const CoefficientVector& cv, int length, int width,
                       const char* name) {
    out << name;
    for (int k = 0; k <= n; ++k) {
      out << ',' << cv.at(k).str();
      if (k <= length - 1 || k >= n - width + 1) out << '*';
    }
    out << '\n';
  };
  if (exact) exact_row(*exact, pair.primary.length, pair.primary.width, "N");
  known_row(pair.primary, "N_tilde");
  if (exact_dual) exact_row(*exact_dual, pair.dual.length, pair.dual.width, "N_dual");
  known_row(pair.dual, "N_tilde_dual");
  return out.str();
}

std::string shape_report_to_json(const ShapeReport& report) {
  json j;
  j["all_pass"] = report.all_pass;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e;
    e["name"] = c.name;
    e["paper_ref"] = c.statement;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    if (c.informational) e["informational"] = true;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["argmax"] = {{"k", report.argmax.argmax},
                 {"in_I1", report.argmax.in_i1},
                 {"in_I2", report.argmax.in_i2}};
  j["argmax_dual"] = {{"k", report.argmax_dual.argmax},
                      {"in_I1", report.argmax_dual.in_i1},
                      {"in_I2", report.argmax_dual.in_i2}};
  return j.dump(2);
}

std::string plot_data_csv(const CoefficientVector& exact,
                          const CoefficientVector& exact_dual, const ApproxPair& pair,
                          const PlotOptions& options) {
  if (options.samples < 2) throw std::invalid_argument("plot_data_csv: samples >= 2");
  const int n = exact.n;
  const PowerPolynomial rel = to_power_basis(NFormPolynomial::from_counts(exact));
  const PowerPolynomial reld = to_power_basis(NFormPolynomial::from_counts(exact_dual));
  auto [apn, apnd] = approx_polynomials(pair);
  const PowerPolynomial ap = to_power_basis(apn);
  const PowerPolynomial apd = to_power_basis(apnd);

  std::ostringstream out;
  out << "p,Rel,RelDual1mp,ApRel,ApRelDual1mp";
  for (int k : options.derivative_orders)
    out << ",d" << k << "Rel,d" << k << "RelDual1mp,d" << k << "ApRel,d" << k
        << "ApRelDual1mp";
  out << '\n';

  std::vector<PowerPolynomial> drel, dreld, dap, dapd;
  for (int k : options.derivative_orders) {
    if (k < 0 || k > n) throw std::invalid_argument("plot_data_csv: bad derivative order");
    drel.push_back(derivative(rel, k));
    dreld.push_back(derivative(reld, k));
    dap.push_back(derivative(ap, k));
    dapd.push_back(derivative(apd, k));
  }

  for (int i = 0; i < options.samples; ++i) {
    const Rational p(i, options.samples - 1);
    const Rational q = 1 - p;
    out << format_double12(to_double(p));
    out << ',' << format_double12(to_double(rel(p)));
    out << ',' << format_double12(to_double(reld(q)));
    out << ',' << format_double12(to_double(ap(p)));
    out << ',' << format_double12(to_double(apd(q)));
    for (std::size_t d = 0; d < drel.size(); ++d) {
      out << ',' << format_double12(to_double(drel[d](p)));
      out << ',' << format_double12(to_double(dreld[d](q)));
      out << ',' << format_double12(to_double(dap[d](p)));
      out << ',' << format_double12(to_double(dapd[d](q)));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace relpoly

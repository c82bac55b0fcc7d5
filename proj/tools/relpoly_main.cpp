// Command-line front end: exact coefficients, spline approximation, shape
// verification, plot data, duals, and full table regeneration.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "relpoly/exact.hpp"
#include "relpoly/network.hpp"
#include "relpoly/report.hpp"
#include "relpoly/shape.hpp"

namespace {

using namespace relpoly;

struct NetworkSpec {
  std::string hammock, pos, sop, matrix_file;
  bool plus = false;

  int count() const {
    return !hammock.empty() + !pos.empty() + !sop.empty() + !matrix_file.empty();
  }
};

std::pair<int, int> parse_dims(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) x = text.find('X');
  if (x == std::string::npos)
    throw CLI::ValidationError("dimensions must look like LxW, e.g. 3x5");
  try {
    int l = std::stoi(text.substr(0, x));
    int w = std::stoi(text.substr(x + 1));
    return {l, w};
  } catch (const std::exception&) {
    throw CLI::ValidationError("dimensions must look like LxW, e.g. 3x5");
  }
}

MatchstickNetwork build_network(const NetworkSpec& spec) {
  if (spec.count() != 1)
    throw CLI::ValidationError(
        "exactly one of --hammock/--pos/--sop/--matrix must be given");
  if (!spec.hammock.empty()) {
    auto [l, w] = parse_dims(spec.hammock);
    return make_hammock(l, w, spec.plus ? HammockVariant::HPlus : HammockVariant::H);
  }
  if (!spec.pos.empty()) {
    auto [l, w] = parse_dims(spec.pos);
    return make_pos(l, w);
  }
  if (!spec.sop.empty()) {
    auto [l, w] = parse_dims(spec.sop);
    return make_sop(l, w);
  }
  return load_network(spec.matrix_file);
}

void add_network_options(CLI::App* cmd, NetworkSpec& spec) {
  cmd->add_option("--hammock", spec.hammock, "hammock network, dimensions LxW");
  cmd->add_flag("--plus", spec.plus, "select the H+ brick-wall variant");
  cmd->add_option("--pos", spec.pos, "parallel-of-series network, dimensions LxW");
  cmd->add_option("--sop", spec.sop, "series-of-parallel network, dimensions LxW");
  cmd->add_option("--matrix,--network", spec.matrix_file,
                  "network file (l w header plus bit rows)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ApproxPair run_approx(const MatchstickNetwork& net, const std::string& variant,
                      const BruteForceOptions& brute, CoefficientVector& cv,
                      CoefficientVector& cvd) {
  cv = brute_force_coefficients(net, brute);
  cvd = brute_force_coefficients(dual(net), brute);
  AlgorithmVariant v = variant_from_name(variant);
  ApproxInputs inputs =
      default_inputs(net.dims.length, net.dims.width, cv, cvd, v);
  return approximate_pair(net.dims.length, net.dims.width, inputs);
}

std::string render_tables(const BruteForceOptions& brute) {
  std::ostringstream out;
  out << "== extremal coefficients of small hammocks (w, l, max N_k, argmax, I1, I2) ==\n";
  for (int w = 2; w <= 5; ++w) {
    for (int l = 2; l <= 5; ++l) {
      if (l == 2 && w == 2) continue;  // not part of the published sweep
      std::vector<HammockVariant> variants{HammockVariant::H};
      if (l % 2 == 0 && w % 2 == 0) variants.push_back(HammockVariant::HPlus);
      for (auto variant : variants) {
        auto cv = brute_force_coefficients(make_hammock(l, w, variant), brute);
        auto m = argmax_intervals(cv, l, w);
        out << w << ',' << l << ',' << cv.at(m.argmax).str() << ',' << m.argmax
            << ",[" << to_double(m.i1_lo) << ' ' << to_double(m.i1_hi) << "],["
            << to_double(m.i2_lo) << ' ' << to_double(m.i2_hi) << "]"
            << (variant == HammockVariant::HPlus ? " (H+)" : " (H)") << '\n';
      }
    }
  }

  auto e_table = [&](int l, int w, const std::vector<int>& ss) {
    const int n = l * w;
    auto cv = brute_force_coefficients(make_hammock(l, w), brute);
    out << "== E(" << l << "," << w << ";s) ==\n";
    for (int s : ss) {
      out << "s=" << s << ", N_s=" << cv.at(s).str() << ", E="
          << compute_e(l, w, s, cv.at(s)).str() << '\n';
    }
  };
  e_table(4, 5, {5, 6, 7, 15, 16});
  e_table(5, 4, {5, 6, 7, 16, 17});
  e_table(5, 5, {6, 7, 8, 20, 21});

  out << "== 3-by-5 hammock: exact and adjusted coefficients ==\n";
  for (const char* variant : {"lminus1", "l"}) {
    CoefficientVector cv, cvd;
    auto net = make_hammock(3, 5);
    auto pair = run_approx(net, variant, brute, cv, cvd);
    out << "variant " << variant << '\n'
        << approx_to_csv(pair, &cv, &cvd);
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reliability polynomials of matchstick networks and their duals"};
  app.require_subcommand(1);

  NetworkSpec spec;
  std::string variant = "lminus1";
  std::string format = "json";
  std::string out_path;
  int samples = 10000;
  int plot_samples = 513;
  int cap = 26;
  int workers = default_workers();
  bool with_power = false;
  std::vector<int> derivative_orders;

  auto add_common = [&](CLI::App* cmd, bool with_network = true) {
    if (with_network) add_network_options(cmd, spec);
    cmd->add_option("--cap", cap, "enumeration cap on n (default 26)");
    cmd->add_option("--workers", workers, "brute-force worker threads");
    cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "write output to this file");
    return cmd;
  };

  auto* cmd_exact = add_common(app.add_subcommand(
      "exact", "exact N-form coefficients by brute force"));
  cmd_exact->add_flag("--power", with_power, "also print the power-basis polynomial");

  auto* cmd_approx = add_common(app.add_subcommand(
      "approx", "quadratic-spline simultaneous approximation of the dual pair"));
  cmd_approx->add_option("--variant", variant, "interpolation variant: lminus1 or l")
      ->check(CLI::IsMember({"lminus1", "l"}));
  cmd_approx->add_option("--samples", samples, "grid size for the measured error");

  auto* cmd_verify = add_common(app.add_subcommand(
      "verify", "run every shape check against brute-force ground truth"));
  cmd_verify->add_option("--variant", variant, "interpolation variant: lminus1 or l")
      ->check(CLI::IsMember({"lminus1", "l"}));

  auto* cmd_plot = add_common(app.add_subcommand(
      "plotdata", "CSV series for the polynomials, approximants and derivatives"));
  cmd_plot->add_option("--variant", variant, "interpolation variant: lminus1 or l")
      ->check(CLI::IsMember({"lminus1", "l"}));
  cmd_plot->add_option("--samples", plot_samples, "number of grid points");
  cmd_plot->add_option("--deriv", derivative_orders, "derivative order(s) to include");

  auto* cmd_dual = add_common(app.add_subcommand(
      "dual", "emit the dual network in the text format"));

  auto* cmd_tables = add_common(app.add_subcommand(
      "tables", "regenerate the published tables end to end"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    const BruteForceOptions brute{cap, workers};

    if (cmd_exact->parsed()) {
      auto net = build_network(spec);
      auto cv = brute_force_coefficients(net, brute);
      if (format == "csv") {
        emit(coefficients_to_csv(cv), out_path);
      } else {
        std::optional<PowerPolynomial> power;
        if (with_power) power = to_power_basis(NFormPolynomial::from_counts(cv));
        emit(coefficients_to_json(cv, net.label, power ? &*power : nullptr), out_path);
      }
      return 0;
    }

    if (cmd_approx->parsed()) {
      auto net = build_network(spec);
      CoefficientVector cv, cvd;
      auto pair = run_approx(net, variant, brute, cv, cvd);
      auto bound = error_bound(net.dims.length, net.dims.width, cv, cvd, pair.piece,
                               pair.piece_dual);
      auto bound_dual = error_bound(net.dims.width, net.dims.length, cvd, cv,
                                    pair.piece_dual, pair.piece);
      auto [ap, apd] = approx_polynomials(pair);
      ApproxReportData data{pair, bound.bound, bound_dual.bound,
                            chebyshev_error(NFormPolynomial::from_counts(cv), ap, samples),
                            chebyshev_error(NFormPolynomial::from_counts(cvd), apd,
                                            samples)};
      emit(format == "csv" ? approx_to_csv(pair, &cv, &cvd) : approx_to_json(data),
           out_path);
      return 0;
    }

    if (cmd_verify->parsed()) {
      auto net = build_network(spec);
      VerifyOptions options;
      options.brute = brute;
      options.variant = variant_from_name(variant);
      auto report = verify_all(net, options);
      emit(shape_report_to_json(report), out_path);
      return report.all_pass ? 0 : 2;
    }

    if (cmd_plot->parsed()) {
      auto net = build_network(spec);
      CoefficientVector cv, cvd;
      auto pair = run_approx(net, variant, brute, cv, cvd);
      PlotOptions options;
      options.samples = plot_samples;
      options.derivative_orders = derivative_orders;
      emit(plot_data_csv(cv, cvd, pair, options), out_path);
      return 0;
    }

    if (cmd_dual->parsed()) {
      auto net = build_network(spec);
      emit(format_network(dual(net)), out_path);
      return 0;
    }

    if (cmd_tables->parsed()) {
      emit(render_tables(brute), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

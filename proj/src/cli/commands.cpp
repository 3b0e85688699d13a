#include "lightshift/cli/commands.hpp"

#include <charconv>
#include <ostream>

#include <nlohmann/json.hpp>

#include "lightshift/bichromatic.hpp"
#include "lightshift/cg_oracle.hpp"
#include "lightshift/errors.hpp"
#include "lightshift/field_configs.hpp"

namespace lightshift::cli {

namespace {

using Json = nlohmann::ordered_json;

double clean(double v) { return v == 0.0 ? 0.0 : v; }

Json to_json(Complex z) { return Json::array({clean(z.real()), clean(z.imag())}); }

Json to_json(const PolarizabilitySet& set) {
  const std::string prefix = set.form == CoefficientForm::a_form ? "a" : "b";
  Json j;
  for (int u = 0; u < 3; ++u) j[prefix + std::to_string(u)] = to_json(set[u]);
  return j;
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view units_name(Units u) {
  return u == Units::physical ? "physical" : "dimensionless";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json atom_summary(const RunConfig& config) {
  const AtomParams p = config.atom_params();
  const DerivedHfConstants c = derive_constants(p);
  Json j;
  j["atom"] = config.atom_label();
  j["spin"] = p.spin.to_string();
  j["a_hf_rad_per_s"] = c.a_hf;
  j["gamma"] = config.effective_gamma();
  j["gamma_bar"] = config.effective_gamma_bar();
  return j;
}

ExitCode run_coeffs(const RunConfig& config, std::ostream& out) {
  const HalfInteger spin = config.spin();
  const double gamma = config.effective_gamma();
  const ComplexDetuning delta(config.required_delta_bar(), config.effective_gamma_bar());
  const PolarizabilitySet b = b_coefficients(spin, gamma, delta);

  Json j = atom_summary(config);
  j["delta_bar"] = delta.delta_bar();
  j["b"] = to_json(b);
  if (config.a_form) j["a"] = to_json(a_coefficients(spin, gamma, delta));
  if (config.units == Units::physical) {
    j["physical_b"] = to_json(physical_b(b, config.atom_params()));
  }
  emit(out, j);
  return ExitCode::success;
}

ExitCode run_scan(const RunConfig& config, std::ostream& out) {
  const HalfInteger spin = config.spin();
  const double gamma = config.effective_gamma();
  const double gamma_bar = config.effective_gamma_bar();
  const GridSpec grid = config.delta_grid({-8.0, 6.0, 1401});

  out << "delta_bar,re_b0,im_b0,re_b1,im_b1,re_b2,im_b2,status\n";
  for (double d : grid.points()) {
    out << format_double(d);
    try {
      check_off_poles(spin, gamma, ComplexDetuning(d));
      const PolarizabilitySet b = b_coefficients(spin, gamma, ComplexDetuning(d, gamma_bar));
      for (int u = 0; u < 3; ++u) {
        out << ',' << format_double(b[u].real()) << ',' << format_double(b[u].imag());
      }
      out << ",ok\n";
    } catch (const PoleError&) {
      out << ",nan,nan,nan,nan,nan,nan,pole\n";
    }
  }
  return ExitCode::success;
}

ExitCode run_heff(const RunConfig& config, std::ostream& out) {
  const AtomParams atom = config.atom_params();
  const HalfInteger spin = atom.spin;
  const double gamma = config.effective_gamma();
  const ComplexDetuning delta(config.required_delta_bar(), config.effective_gamma_bar());
  const FieldConfig field = config.field.to_field_config();
  const CVector3 e = field_at(field, config.field.position, config.field.time);

  PolarizabilitySet coeffs = config.a_form ? a_coefficients(spin, gamma, delta)
                                           : b_coefficients(spin, gamma, delta);
  if (config.units == Units::physical) {
    const double scale = physical_scale(atom);
    coeffs.c0 *= scale;
    coeffs.c1 *= scale;
    coeffs.c2 *= scale;
    coeffs.units = Units::physical;
  }
  const SpinOperators ops = make_spin_operators(spin);
  const EffectiveHamiltonian h = assemble_heff(coeffs, e, ops);

  Json j;
  j["dim"] = ops.dim;
  j["units"] = units_name(h.units);
  j["form"] = config.a_form ? "a" : "b";
  j["delta_bar"] = delta.delta_bar();
  j["gamma_bar"] = delta.gamma_bar();
  j["field"] = Json::array({to_json(e[0]), to_json(e[1]), to_json(e[2])});
  j["matrix"] = to_json(h.matrix);
  if (h.parts) {
    j["parts"] = {{"scalar", to_json(h.parts->scalar)},
                  {"vector", to_json(h.parts->vector)},
                  {"tensor", to_json(h.parts->tensor)}};
  } else {
    j["parts"] = nullptr;
  }
  emit(out, j);
  return ExitCode::success;
}

ExitCode run_oracle_diff(const RunConfig& config, std::ostream& out) {
  const HalfInteger spin = config.spin();
  const double gamma = config.effective_gamma();
  const double gamma_bar = config.effective_gamma_bar();
  const GridSpec g = config.delta_grid({-8.0, 6.0, 200});
  const std::vector<double> grid = pole_avoiding_grid(spin, gamma, g.min, g.max, g.steps);
  const double dev = oracle_vs_analytic_deviation(spin, gamma, grid, gamma_bar);
  const bool pass = dev <= config.threshold;

  Json j = atom_summary(config);
  j["points"] = grid.size();
  j["max_deviation"] = dev;
  j["threshold"] = config.threshold;
  j["pass"] = pass;
  emit(out, j);
  return pass ? ExitCode::success : ExitCode::check_failed;
}

ExitCode run_bichromatic(const RunConfig& config, const CommandOptions& options,
                         std::ostream& out) {
  const HalfInteger spin = config.spin();
  const double gamma = config.effective_gamma();
  const double gamma_bar = config.effective_gamma_bar();

  if (options.scan) {
    const std::vector<MeritRow> rows =
        merit_scan(spin, gamma, gamma_bar, config.delta_small_grid().points());
    out << "delta_small_bar,w_alpha,re_b1_sum,im_b0_sum,ratio,status\n";
    for (const MeritRow& r : rows) {
      out << format_double(r.delta_small_bar) << ',' << format_double(r.weight_alpha) << ','
          << format_double(r.re_b1_sum) << ',' << format_double(r.im_b0_sum) << ','
          << format_double(r.ratio) << ',' << to_string(r.status) << '\n';
    }
    return ExitCode::success;
  }

  const double small = config.required_delta_small_bar();
  const double center = hf_energies(spin, gamma).mid;
  const double da = center + small;
  const double db = center - small;
  check_off_poles(spin, gamma, ComplexDetuning(da));
  check_off_poles(spin, gamma, ComplexDetuning(db));
  const CancellationWeights w = solve_tensor_cancellation(da, db, spin, gamma, gamma_bar);
  const PolarizabilitySet sum =
      combined_coefficients({da, db, w.alpha, w.beta, gamma_bar}, spin, gamma);

  Json j = atom_summary(config);
  j["delta_small_bar"] = small;
  j["delta_alpha"] = da;
  j["delta_beta"] = db;
  j["weight_alpha"] = w.alpha;
  j["weight_beta"] = w.beta;
  j["b_sum"] = to_json(sum);
  j["ratio"] = sum.c1.real() / sum.c0.imag();
  emit(out, j);
  return ExitCode::success;
}

ExitCode run_rephasing(const RunConfig& config, std::ostream& out) {
  const double small = config.required_delta_small_bar();
  const double a_hf = derive_constants(config.atom_params()).a_hf;
  const double delta = small * std::abs(a_hf);

  Json j;
  j["atom"] = config.atom_label();
  j["delta_small_bar"] = small;
  j["delta_rad_per_s"] = delta;
  j["length_m"] = rephasing_length(delta);
  emit(out, j);
  return ExitCode::success;
}

}  // namespace

ExitCode run_subcommand(std::string_view name, const RunConfig& config,
                        const CommandOptions& options, std::ostream& out) {
  if (name == "coeffs") return run_coeffs(config, out);
  if (name == "scan") return run_scan(config, out);
  if (name == "heff") return run_heff(config, out);
  if (name == "oracle-diff") return run_oracle_diff(config, out);
  if (name == "bichromatic") return run_bichromatic(config, options, out);
  if (name == "rephasing") return run_rephasing(config, out);
  throw ConfigError("unknown subcommand '" + std::string(name) + "'");
}

ExitCode exit_code_for(const std::exception& error) {
  if (dynamic_cast<const ConfigError*>(&error)) return ExitCode::config_error;
  if (dynamic_cast<const InfeasibleError*>(&error)) return ExitCode::infeasible;
  if (dynamic_cast<const DomainError*>(&error)) return ExitCode::domain_error;
  if (dynamic_cast<const DimensionError*>(&error)) return ExitCode::domain_error;
  return ExitCode::check_failed;
}

std::string error_json(const std::exception& error) {
  Json j;
  if (const auto* c = dynamic_cast<const ConfigError*>(&error)) {
    j["error"] = "config";
    j["message"] = c->what();
    if (c->line() > 0) j["line"] = c->line();
  } else if (dynamic_cast<const PoleError*>(&error)) {
    j["error"] = "pole";
    j["message"] = error.what();
  } else if (dynamic_cast<const InfeasibleError*>(&error)) {
    j["error"] = "infeasible";
    j["message"] = error.what();
  } else if (dynamic_cast<const DomainError*>(&error) ||
             dynamic_cast<const DimensionError*>(&error)) {
    j["error"] = "domain";
    j["message"] = error.what();
  } else {
    j["error"] = "internal";
    j["message"] = error.what();
  }
  return j.dump();
}

std::string format_double(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, clean(value));
  return std::string(buf, end);
}

}  // namespace lightshift::cli

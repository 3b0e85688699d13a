#include <cmath>
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lightshift/bichromatic.hpp"
#include "lightshift/cg_oracle.hpp"
#include "lightshift/cli/commands.hpp"
#include "lightshift/cli/config.hpp"
#include "lightshift/errors.hpp"
#include "lightshift/field_configs.hpp"
#include "lightshift/hyperfine.hpp"
#include "lightshift/shift_coefficients.hpp"

namespace py = pybind11;
using namespace lightshift;

namespace {

using Triple = std::tuple<Complex, Complex, Complex>;

HalfInteger to_spin(double spin) {
  const double twice = 2.0 * spin;
  if (std::abs(twice - std::round(twice)) > 1e-12) {
    throw DomainError("spin must be a multiple of 1/2");
  }
  return HalfInteger(static_cast<int>(std::lround(twice)));
}

Triple to_triple(const PolarizabilitySet& s) { return {s.c0, s.c1, s.c2}; }

PolarizabilitySet from_triple(const Triple& t, const std::string& form) {
  PolarizabilitySet s;
  if (form == "a") {
    s.form = CoefficientForm::a_form;
  } else if (form != "b") {
    throw DomainError("form must be 'a' or 'b'");
  }
  s.c0 = std::get<0>(t);
  s.c1 = std::get<1>(t);
  s.c2 = std::get<2>(t);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form and sum-over-states nuclear-spin light shifts";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", domain.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def(
      "preset",
      [](const std::string& name) {
        const AtomParams p = presets::by_name(name);
        py::dict d;
        d["spin"] = p.spin.value();
        d["ahf_prime"] = p.ahf_prime;
        d["bhf"] = p.bhf;
        d["linewidth"] = p.linewidth;
        d["dge_sq"] = p.dge_sq;
        return d;
      },
      py::arg("name"), "Atom constants (angular frequencies in rad/s) of a named preset.");

  m.def(
      "derive_constants",
      [](const std::string& name) {
        const DerivedHfConstants c = derive_constants(presets::by_name(name));
        return std::make_tuple(c.a_hf, c.gamma);
      },
      py::arg("name"), "(A_HF, gamma) of a named preset.");

  m.def(
      "hf_energies",
      [](double spin, double gamma) {
        const HfEnergies e = hf_energies(to_spin(spin), gamma);
        return std::make_tuple(e.lower, e.mid, e.upper);
      },
      py::arg("spin"), py::arg("gamma"), "(E_{i-1}, E_i, E_{i+1}) in units of A_HF.");

  m.def(
      "a_coefficients",
      [](double spin, double gamma, double delta_bar, double gamma_bar) {
        return to_triple(a_coefficients(to_spin(spin), gamma, ComplexDetuning(delta_bar, gamma_bar)));
      },
      py::arg("spin"), py::arg("gamma"), py::arg("delta_bar"), py::arg("gamma_bar") = 0.0);

  m.def(
      "b_coefficients",
      [](double spin, double gamma, double delta_bar, double gamma_bar) {
        return to_triple(b_coefficients(to_spin(spin), gamma, ComplexDetuning(delta_bar, gamma_bar)));
      },
      py::arg("spin"), py::arg("gamma"), py::arg("delta_bar"), py::arg("gamma_bar") = 0.0);

  m.def(
      "asymptotic_b",
      [](double spin, double gamma, double delta_bar) {
        return to_triple(asymptotic_b(to_spin(spin), gamma, delta_bar));
      },
      py::arg("spin"), py::arg("gamma"), py::arg("delta_bar"));

  m.def(
      "im_b_first_order",
      [](double spin, double delta_bar, double gamma_bar) {
        const LossRates r = im_b_first_order(to_spin(spin), delta_bar, gamma_bar);
        return std::make_tuple(r.im0, r.im1, r.im2);
      },
      py::arg("spin"), py::arg("delta_bar"), py::arg("gamma_bar"));

  m.def(
      "oracle_b",
      [](double spin, double gamma, double delta_bar, double gamma_bar) {
        const HalfInteger s = to_spin(spin);
        const Extraction ex = extract_b_from_d(
            oracle_d_tensor(s, gamma, ComplexDetuning(delta_bar, gamma_bar)),
            make_spin_operators(s));
        return std::make_tuple(ex.coefficients.c0, ex.coefficients.c1, ex.coefficients.c2,
                               ex.residual);
      },
      py::arg("spin"), py::arg("gamma"), py::arg("delta_bar"), py::arg("gamma_bar") = 0.0,
      "Sum-over-states b-coefficients and the decomposition residual.");

  m.def(
      "spin_operators",
      [](double spin) {
        const SpinOperators ops = make_spin_operators(to_spin(spin));
        return std::make_tuple(ops.ix, ops.iy, ops.iz);
      },
      py::arg("spin"));

  m.def(
      "assemble_heff",
      [](const Triple& coeffs, const CVector3& field, double spin, const std::string& form) {
        return assemble_heff(from_triple(coeffs, form), field, make_spin_operators(to_spin(spin)))
            .matrix;
      },
      py::arg("coeffs"), py::arg("field"), py::arg("spin"), py::arg("form") = "b");

  m.def(
      "solve_tensor_cancellation",
      [](double delta_alpha, double delta_beta, double spin, double gamma, double gamma_bar) {
        const CancellationWeights w =
            solve_tensor_cancellation(delta_alpha, delta_beta, to_spin(spin), gamma, gamma_bar);
        return std::make_tuple(w.alpha, w.beta);
      },
      py::arg("delta_alpha"), py::arg("delta_beta"), py::arg("spin"), py::arg("gamma"),
      py::arg("gamma_bar"));

  m.def(
      "merit_scan",
      [](double spin, double gamma, double gamma_bar, const std::vector<double>& grid) {
        py::list out;
        for (const MeritRow& r : merit_scan(to_spin(spin), gamma, gamma_bar, grid)) {
          py::dict d;
          d["delta_small_bar"] = r.delta_small_bar;
          d["w_alpha"] = r.weight_alpha;
          d["re_b1_sum"] = r.re_b1_sum;
          d["im_b0_sum"] = r.im_b0_sum;
          d["re_b2_sum"] = r.re_b2_sum;
          d["ratio"] = r.ratio;
          d["status"] = std::string(to_string(r.status));
          out.append(d);
        }
        return out;
      },
      py::arg("spin"), py::arg("gamma"), py::arg("gamma_bar"), py::arg("grid"));

  m.def("rephasing_length", &rephasing_length, py::arg("delta"),
        py::arg("speed_of_light") = kSpeedOfLight);

  m.def(
      "run",
      [](const std::string& subcommand, const std::string& config_text, bool scan) {
        const cli::RunConfig config = cli::parse_config(config_text);
        std::ostringstream out;
        cli::CommandOptions options;
        options.scan = scan;
        const cli::ExitCode code = cli::run_subcommand(subcommand, config, options, out);
        return std::make_tuple(static_cast<int>(code), out.str());
      },
      py::arg("subcommand"), py::arg("config_text"), py::arg("scan") = false,
      "Run a CLI subcommand on configuration text; returns (exit_code, output).");
}

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "lightshift/bichromatic.hpp"
#include "lightshift/cg_oracle.hpp"
#include "lightshift/cli/commands.hpp"
#include "lightshift/cli/config.hpp"
#include "lightshift/errors.hpp"
#include "lightshift/field_configs.hpp"
#include "lightshift/hyperfine.hpp"
#include "lightshift/shift_coefficients.hpp"
#include "support/reference.hpp"

using namespace lightshift;
using reference::expm;
using reference::max_abs;
using reference::rel_err;
using reference::uniform;

namespace {

const Complex kI{0.0, 1.0};
const HalfInteger kNine = HalfInteger::half(9);
const double kSrGamma = reference::kSr87Gamma;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int points = 0;
  for (int twice : {3, 5, 7, 9}) {
    for (double gamma : {0.0, 0.0057}) {
      for (double gb : {0.0, 3e-5}) {
        const HalfInteger spin(twice);
        const std::vector<double> grid = standard_grid(spin, gamma);
        for (double x : grid) {
          for (double p : hf_energies(spin, gamma).as_array()) {
            if (std::abs(x - p) < 0.05 - 1e-15) return {false, "grid point too close to a pole"};
          }
        }
        worst = std::max(worst, oracle_vs_analytic_deviation(spin, gamma, grid, gb));
        points += static_cast<int>(grid.size());
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-10 && seconds < 10.0,
          fmt("max relative deviation %.2e over %d points in %.2f s", worst, points, seconds)};
}

Outcome point_values() {
  const HfEnergies e = hf_energies(kNine, 0.0057);
  const ComplexDetuning mean((e.lower + e.mid + e.upper) / 3.0);
  const PolarizabilitySet b = b_coefficients(kNine, 0.0057, mean);
  const bool ok = std::abs(b.c0.real() - 0.76) <= 0.01 && std::abs(b.c1.real() - 0.09) <= 0.01 &&
                  std::abs(b.c2.real() - 0.05) <= 0.01;
  return {ok, fmt("delta_bar %.5f: b0 %.4f, b1 %.4f, b2 %.4f", mean.delta_bar(), b.c0.real(),
                  b.c1.real(), b.c2.real())};
}

Outcome ratio_law() {
  double worst = 0.0;
  for (int twice : {3, 5, 7, 9}) {
    const HalfInteger spin(twice);
    for (double d : standard_grid(spin, 0.0)) {
      const PolarizabilitySet b = b_coefficients(spin, 0.0, ComplexDetuning(d));
      worst = std::max(worst, std::abs((b.c1 / b.c2).real() - (2.0 * d + 3.0)));
    }
  }
  const auto b1 = [](double d) { return b_coefficients(kNine, 0.0, ComplexDetuning(d)).c1.real(); };
  double lo = -5.0, hi = -1.1;
  if (b1(lo) * b1(hi) >= 0.0) return {false, "no sign change of b1 between the poles"};
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (b1(mid) * b1(lo) > 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  return {worst <= 1e-12 && std::abs(root + 1.5) <= 1e-12,
          fmt("max |b1/b2 - (2d+3)| %.2e, b1 zero at %.15f", worst, root)};
}

Outcome b_form_map() {
  double worst = 0.0;
  for (int twice : {3, 5, 7, 9}) {
    for (double gamma : {0.0, kSrGamma}) {
      for (double gb : {0.0, 3e-5}) {
        const HalfInteger spin(twice);
        for (double d : standard_grid(spin, gamma)) {
          const ComplexDetuning delta(d, gb);
          const PolarizabilitySet direct = b_coefficients(spin, gamma, delta);
          const PolarizabilitySet mapped = to_b_form(a_coefficients(spin, gamma, delta), spin);
          for (int u = 0; u < 3; ++u) worst = std::max(worst, rel_err(mapped[u], direct[u]));
        }
      }
    }
  }
  return {worst <= 1e-14, fmt("max relative difference %.2e", worst)};
}

Outcome loss_expansions() {
  double worst = 0.0;
  for (double d : {-8.0, -3.0, 0.0, 2.0, 6.0}) {
    const PolarizabilitySet full = b_coefficients(kNine, 0.0, ComplexDetuning(d, 1e-6));
    const LossRates first = im_b_first_order(kNine, d, 1e-6);
    worst = std::max({worst, rel_err(first.im0, full.c0.imag()), rel_err(first.im1, full.c1.imag()),
                      rel_err(first.im2, full.c2.imag())});
  }
  return {worst <= 1e-4, fmt("max relative difference %.2e", worst)};
}

Outcome loss_limit() {
  const PolarizabilitySet b = b_coefficients(kNine, 0.0, ComplexDetuning(1e4, 3e-5));
  const double ratio = std::abs(b.c0.imag() / b.c1.real());
  return {std::abs(ratio / 3e-5 - 1.0) <= 1e-3, fmt("|Im b0 / Re b1| = %.6e", ratio)};
}

Outcome hyperfine_spectrum() {
  double worst = 0.0;
  bool degeneracies = true;
  for (int twice = 1; twice <= 19; ++twice) {
    for (double gamma : {0.0, kSrGamma}) {
      const HalfInteger spin(twice);
      const HfEnergies e = hf_energies(spin, gamma);
      std::vector<double> want;
      want.insert(want.end(), twice + 3, e.upper);
      want.insert(want.end(), twice + 1, e.mid);
      if (!e.lower_is_formal) want.insert(want.end(), twice - 1, e.lower);
      std::sort(want.begin(), want.end());
      const Eigen::VectorXd ev =
          Eigen::SelfAdjointEigenSolver<CMatrix>(hf_hamiltonian_matrix(spin, gamma)).eigenvalues();
      if (ev.size() != static_cast<Eigen::Index>(want.size())) {
        degeneracies = false;
        continue;
      }
      for (std::size_t k = 0; k < want.size(); ++k) {
        worst = std::max(worst, std::abs(ev[static_cast<Eigen::Index>(k)] - want[k]));
      }
    }
  }
  return {degeneracies && worst <= 1e-12,
          fmt("spins 1/2..19/2, max eigenvalue error %.2e", worst)};
}

Outcome configuration_closed_forms() {
  double worst_single = 0.0, worst_lattice = 0.0;
  const double a = 1.3, k = 2.0;
  for (int twice : {1, 3, 5, 9}) {
    const HalfInteger spin(twice);
    const SpinOperators ops = make_spin_operators(spin);
    const double ii = spin.casimir();
    const PolarizabilitySet b = b_coefficients(spin, kSrGamma * (twice > 1), ComplexDetuning(0.7, 3e-5));
    const CMatrix lin = assemble_heff(b, field_at(SingleLinear{a, k}, Vector3(0, 0, 0.4)), ops).matrix;
    const CMatrix plus =
        assemble_heff(b, field_at(SingleCircular{a, k, Handedness::plus}, Vector3::Zero()), ops).matrix;
    const CMatrix minus =
        assemble_heff(b, field_at(SingleCircular{a, k, Handedness::minus}, Vector3::Zero()), ops).matrix;
    CMatrix want_lin = CMatrix::Zero(ops.dim, ops.dim), want_plus = want_lin, want_minus = want_lin;
    for (int r = 0; r < ops.dim; ++r) {
      const double m = ops.iz(r, r).real();
      want_lin(r, r) = a * a / 4.0 * (b.c0 + 2.0 * b.c2 * (m * m - ii / 3.0));
      want_plus(r, r) = a * a / 4.0 * (b.c0 - b.c1 * m - b.c2 * (m * m - ii / 3.0));
      want_minus(r, r) = a * a / 4.0 * (b.c0 + b.c1 * m - b.c2 * (m * m - ii / 3.0));
    }
    worst_single = std::max({worst_single, max_abs(lin - want_lin), max_abs(plus - want_plus),
                             max_abs(minus - want_minus)});
  }
  const SpinOperators ops = make_spin_operators(kNine);
  const PolarizabilitySet b = b_coefficients(kNine, kSrGamma, ComplexDetuning(-2.3, 3e-5));
  for (int trial = 0; trial < 20; ++trial) {
    const CounterPropComponents c = counterprop_components(b, a, k, uniform(-5, 5), ops);
    worst_lattice = std::max(worst_lattice, max_abs(c.tensor_rotated - c.tensor_lab));
  }
  return {worst_single <= 1e-13 && worst_lattice <= 1e-13,
          fmt("single beams %.2e, lattice tensor forms %.2e at 20 z", worst_single, worst_lattice)};
}

Outcome soc_transforms() {
  const SpinOperators ops = make_spin_operators(kNine);
  const PolarizabilitySet b = b_coefficients(kNine, kSrGamma, ComplexDetuning(-2.3));
  const double a = 1.1, k = 0.8, dw = 0.37;
  const Vector3 r(uniform(-3, 3), uniform(-3, 3), uniform(-3, 3));

  double drift = 0.0;
  CMatrix first;
  for (int trial = 0; trial < 10; ++trial) {
    const double t = uniform(-20, 20);
    const CMatrix h = assemble_heff(b, field_at(PerpendicularSoc{a, k, dw}, r, t), ops).matrix;
    const CMatrix u = expm(-kI * dw * t * ops.iz);
    const CMatrix rotated = u * h * u.adjoint() + dw * ops.iz;
    if (trial == 0) first = rotated;
    drift = std::max(drift, max_abs(rotated - first));
  }

  const double tuned = tuned_delta_omega(b, a);
  const CMatrix v = soc_rotating_frame(b, a, k, tuned, r, ops).vector;
  const double iz = std::abs((v * ops.iz).trace() / (ops.iz * ops.iz).trace());

  double gauge = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const Vector3 p(uniform(-3, 3), uniform(-3, 3), uniform(-3, 3));
    const CMatrix in_plane = ixy(ops, k * p.y() - k * p.z());
    const CMatrix u1 = expm(-kI * (k * p.z() - k * p.y()) * ops.iz);
    gauge = std::max({gauge, max_abs(u1 * in_plane * u1.adjoint() - ops.ix),
                      max_abs(gauge_transform(in_plane, ops, k, p) - ops.ix)});
  }
  return {drift <= 1e-12 && iz <= 1e-13 && gauge <= 1e-12,
          fmt("time drift %.2e, I_z projection %.2e, gauge %.2e", drift, iz, gauge)};
}

Outcome bichromatic_optimum() {
  const std::vector<MeritRow> rows = merit_scan(kNine, kSrGamma, 3e-5, default_merit_grid());
  int feasible = 0;
  double worst_b2 = 0.0;
  for (const MeritRow& row : rows) {
    if (row.status != RowStatus::ok) continue;
    ++feasible;
    worst_b2 = std::max(worst_b2, std::abs(row.re_b2_sum));
  }
  double best = 0.0, at = 0.0;
  for (std::size_t k : local_optima(rows)) {
    if (rows[k].delta_small_bar >= 2.0 && rows[k].delta_small_bar <= 4.0 &&
        std::abs(rows[k].ratio) > best) {
      best = std::abs(rows[k].ratio);
      at = rows[k].delta_small_bar;
    }
  }
  const bool ok = feasible > 0 && worst_b2 <= 1e-12 && best >= 5e3 && best <= 2e4;
  return {ok, fmt("%d feasible rows, max |Re b2 sum| %.2e, optimum |ratio| %.1f at delta %.2f",
                  feasible, worst_b2, best, at)};
}

Outcome spin_half_pole() {
  const HalfInteger half = HalfInteger::half(1);
  const SpinOperators ops = make_spin_operators(half);
  const CVector3 e(Complex(0.3, 0.1), Complex(-0.7, 0.4), Complex(0.2, -0.5));
  double worst = 0.0;
  for (double d : {-1.7, -1.5 + 0.2, -1.5 - 0.2, 1.0}) {
    const ComplexDetuning delta(d);
    const CMatrix oracle = contract(oracle_d_tensor(half, 0.0, delta), e);
    const CMatrix analytic = assemble_heff(b_coefficients(half, 0.0, delta), e, ops).matrix;
    worst = std::max(worst, max_abs(oracle - analytic));
  }
  return {worst <= 1e-10, fmt("max entry difference %.2e", worst)};
}

Outcome determinism() {
  using namespace lightshift::cli;
  const RunConfig config = parse_config(
      "atom = sr87\ndelta_bar = 0.4\ndelta_small_bar = 3\n[field]\ntype = soc\nx = 0.1\nt = 1\n");
  const auto once = [&](std::string_view name, bool scan) {
    std::ostringstream out;
    run_subcommand(name, config, CommandOptions{scan}, out);
    return out.str();
  };
  int checked = 0;
  for (std::string_view name : kSubcommands) {
    for (bool scan : {false, true}) {
      if (scan && name != "bichromatic") continue;
      if (once(name, scan) != once(name, scan)) {
        return {false, "output of '" + std::string(name) + "' differs between runs"};
      }
      ++checked;
    }
  }
  return {true, fmt("%d subcommand outputs byte-identical", checked)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"point values at the mean level energy", point_values},
      {"vector/tensor ratio law", ratio_law},
      {"a-form to b-form map", b_form_map},
      {"first-order loss expansions", loss_expansions},
      {"far-detuned loss ratio", loss_limit},
      {"hyperfine spectrum", hyperfine_spectrum},
      {"configuration closed forms", configuration_closed_forms},
      {"spin-orbit coupling transforms", soc_transforms},
      {"bichromatic optimum", bichromatic_optimum},
      {"spin-1/2 spurious pole", spin_half_pole},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] AC-%zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

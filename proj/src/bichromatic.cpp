#include "lightshift/bichromatic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lightshift/errors.hpp"
#include "lightshift/hyperfine.hpp"

namespace lightshift {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool near_pole(HalfInteger spin, double gamma, double delta_bar) {
  for (double e : hf_energies(spin, gamma).as_array()) {
    if (std::abs(delta_bar - e) <= kPoleEpsilon) return true;
  }
  return false;
}

}  // namespace

void BichromaticSpec::validate() const {
  const auto in_unit = [](double w) { return w >= 0.0 && w <= 1.0; };
  if (!in_unit(weight_alpha) || !in_unit(weight_beta)) {
    throw DomainError("bichromatic weights must lie in [0, 1]");
  }
  if (std::abs(weight_alpha + weight_beta - 1.0) > 1e-12) {
    throw DomainError("bichromatic weights must sum to 1");
  }
  if (!(gamma_bar >= 0.0)) throw DomainError("gamma_bar must be non-negative");
}

PolarizabilitySet combined_coefficients(const BichromaticSpec& spec, HalfInteger spin,
                                        double gamma) {
  spec.validate();
  const PolarizabilitySet a =
      b_coefficients(spin, gamma, ComplexDetuning(spec.delta_alpha, spec.gamma_bar));
  const PolarizabilitySet b =
      b_coefficients(spin, gamma, ComplexDetuning(spec.delta_beta, spec.gamma_bar));
  return weighted_sum(spec.weight_alpha, a, spec.weight_beta, b);
}

CancellationWeights solve_tensor_cancellation(double delta_alpha, double delta_beta,
                                              HalfInteger spin, double gamma,
                                              double gamma_bar) {
  const double ra = b_coefficients(spin, gamma, ComplexDetuning(delta_alpha, gamma_bar)).c2.real();
  const double rb = b_coefficients(spin, gamma, ComplexDetuning(delta_beta, gamma_bar)).c2.real();
  if (!(ra * rb < 0.0)) {
    throw InfeasibleError("Re b2 has the same sign at both detunings; tensor shifts cannot cancel");
  }
  CancellationWeights w;
  w.alpha = std::abs(rb) / (std::abs(ra) + std::abs(rb));
  w.beta = 1.0 - w.alpha;
  return w;
}

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::ok: return "ok";
    case RowStatus::pole: return "pole";
    case RowStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

std::vector<MeritRow> merit_scan(HalfInteger spin, double gamma, double gamma_bar,
                                 std::span<const double> delta_small_grid) {
  const double center = hf_energies(spin, gamma).mid;
  std::vector<MeritRow> rows;
  rows.reserve(delta_small_grid.size());
  for (double small : delta_small_grid) {
    MeritRow row{small, kNaN, kNaN, kNaN, kNaN, kNaN, RowStatus::ok};
    const double da = center + small;
    const double db = center - small;
    if (near_pole(spin, gamma, da) || near_pole(spin, gamma, db)) {
      row.status = RowStatus::pole;
      rows.push_back(row);
      continue;
    }
    try {
      const CancellationWeights w = solve_tensor_cancellation(da, db, spin, gamma, gamma_bar);
      const PolarizabilitySet sum =
          combined_coefficients({da, db, w.alpha, w.beta, gamma_bar}, spin, gamma);
      row.weight_alpha = w.alpha;
      row.re_b1_sum = sum.c1.real();
      row.im_b0_sum = sum.c0.imag();
      row.re_b2_sum = sum.c2.real();
      row.ratio = row.re_b1_sum / row.im_b0_sum;
    } catch (const InfeasibleError&) {
      row.status = RowStatus::infeasible;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::size_t> local_optima(std::span<const MeritRow> rows) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k + 1 < rows.size(); ++k) {
    const MeritRow& prev = rows[k - 1];
    const MeritRow& cur = rows[k];
    const MeritRow& next = rows[k + 1];
    if (prev.status != RowStatus::ok || cur.status != RowStatus::ok ||
        next.status != RowStatus::ok) {
      continue;
    }
    const double rising = std::abs(cur.ratio) - std::abs(prev.ratio);
    const double falling = std::abs(next.ratio) - std::abs(cur.ratio);
    if (rising > 0.0 && falling <= 0.0) out.push_back(k);
  }
  return out;
}

double rephasing_length(double delta_physical, double speed_of_light) {
  if (!(delta_physical > 0.0)) throw DomainError("rephasing needs a positive frequency offset");
  return std::numbers::pi * speed_of_light / (2.0 * delta_physical);
}

std::vector<double> default_merit_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 90; ++k) grid.push_back((10 + k) / 20.0);
  return grid;
}

}  // namespace lightshift

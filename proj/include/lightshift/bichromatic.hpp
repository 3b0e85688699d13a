#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lightshift/shift_coefficients.hpp"

namespace lightshift {

inline constexpr double kSpeedOfLight = 299792458.0;

/// Two fields of identical geometry at widely separated detunings, with
/// intensity weights normalized to one.
struct BichromaticSpec {
  double delta_alpha = 0.0;
  double delta_beta = 0.0;
  double weight_alpha = 0.5;
  double weight_beta = 0.5;
  double gamma_bar = 0.0;

  /// Throws DomainError unless both weights lie in [0, 1] and sum to 1.
  void validate() const;
};

/// w_alpha b(delta_alpha - i gamma_bar) + w_beta b(delta_beta - i gamma_bar).
PolarizabilitySet combined_coefficients(const BichromaticSpec& spec, HalfInteger spin,
                                        double gamma);

struct CancellationWeights {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Weights that zero the summed Re b2. Throws InfeasibleError when Re b2 has
/// the same sign (or vanishes) at both detunings.
CancellationWeights solve_tensor_cancellation(double delta_alpha, double delta_beta,
                                              HalfInteger spin, double gamma,
                                              double gamma_bar);

enum class RowStatus { ok, pole, infeasible };

std::string_view to_string(RowStatus status);

/// One point of the symmetric scan delta = E_i +- delta_small. Numeric fields
/// are NaN unless status is ok.
struct MeritRow {
  double delta_small_bar = 0.0;
  double weight_alpha = 0.0;
  double re_b1_sum = 0.0;
  double im_b0_sum = 0.0;
  double re_b2_sum = 0.0;
  double ratio = 0.0;  ///< re_b1_sum / im_b0_sum
  RowStatus status = RowStatus::ok;
};

std::vector<MeritRow> merit_scan(HalfInteger spin, double gamma, double gamma_bar,
                                 std::span<const double> delta_small_grid);

/// Indices of interior rows where |ratio| has a local maximum, i.e. where the
/// discrete derivative changes sign from positive to non-positive. Only runs
/// of ok rows are considered.
std::vector<std::size_t> local_optima(std::span<const MeritRow> rows);

/// pi c / (2 delta) for an angular frequency delta > 0.
double rephasing_length(double delta_physical, double speed_of_light = kSpeedOfLight);

/// 0.5, 0.55, ..., 5.0.
std::vector<double> default_merit_grid();

}  // namespace lightshift

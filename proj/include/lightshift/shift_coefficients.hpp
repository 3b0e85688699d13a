#pragma once

#include <array>
#include <complex>
#include <optional>

#include "lightshift/hyperfine.hpp"
#include "lightshift/spin_algebra.hpp"

namespace lightshift {

/// Distance (in units of A_HF) from a hyperfine pole below which a lossless
/// evaluation is rejected.
inline constexpr double kPoleEpsilon = 1e-9;

/// Reduced Planck constant in J s; used only for physical-unit conversion.
inline constexpr double kHbar = 1.054571817e-34;

/// Dimensionless complex detuning  delta_bar - i gamma_bar, with
/// delta_bar = Delta/(hbar A_HF) and gamma_bar = Gamma/|A_HF| >= 0.
class ComplexDetuning {
 public:
  /// Throws DomainError if gamma_bar is negative or either value is not finite.
  explicit ComplexDetuning(double delta_bar, double gamma_bar = 0.0);

  double delta_bar() const { return delta_bar_; }
  double gamma_bar() const { return gamma_bar_; }
  Complex value() const { return {delta_bar_, -gamma_bar_}; }
  bool lossless() const { return gamma_bar_ == 0.0; }

 private:
  double delta_bar_;
  double gamma_bar_;
};

enum class CoefficientForm { a_form, b_form };
enum class Units { dimensionless, physical };

/// Scalar, vector and tensor coefficients (c0, c1, c2).
///
/// In a-form they multiply |E|^2, I.(E* x E) and (E*.I)(E.I); in b-form the
/// symmetric traceless set |E|^2, I.(E* x E) and
/// E*_s E_q {I_s, I_q} - (2/3)|E|^2 I^2 (see assemble_heff).
struct PolarizabilitySet {
  CoefficientForm form = CoefficientForm::b_form;
  Units units = Units::dimensionless;
  Complex c0{};
  Complex c1{};
  Complex c2{};

  /// Extended-precision values behind c0..c2 when they come from the closed
  /// forms. to_b_form uses them as long as they still round to c0..c2.
  std::optional<std::array<std::complex<long double>, 3>> extended;

  Complex operator[](int u) const;
};

/// Throws PoleError when the detuning is lossless and within kPoleEpsilon of
/// any of the three (possibly formal) hyperfine energies.
void check_off_poles(HalfInteger spin, double gamma, const ComplexDetuning& delta);

/// Closed-form a-coefficients written with the energy combinations
/// E^(+-) = (E_{i+1} +- E_i + E_{i-1})/2 - delta.
PolarizabilitySet a_coefficients(HalfInteger spin, double gamma, const ComplexDetuning& delta);

/// The same a-coefficients with numerators expanded in delta, gamma and i(i+1).
/// Kept as an algebraically independent route for cross-checks.
PolarizabilitySet a_coefficients_expanded(HalfInteger spin, double gamma,
                                          const ComplexDetuning& delta);

/// Closed-form b-coefficients over the common denominator
/// (delta - E_{i+1})(delta - E_i)(delta - E_{i-1}).
PolarizabilitySet b_coefficients(HalfInteger spin, double gamma, const ComplexDetuning& delta);

/// b0 = a0 + i(i+1) a2/3, b1 = a1 + a2/2, b2 = a2/2.
PolarizabilitySet to_b_form(const PolarizabilitySet& a, HalfInteger spin);

/// Far-detuned series of the b-coefficients through delta^-3. Throws
/// DomainError unless |delta| exceeds every |E_f|.
PolarizabilitySet asymptotic_b(HalfInteger spin, double gamma, double delta_bar);

/// Imaginary parts of b0, b1, b2 to first order in gamma_bar, for gamma = 0.
struct LossRates {
  double im0 = 0.0;
  double im1 = 0.0;
  double im2 = 0.0;
};

LossRates im_b_first_order(HalfInteger spin, double delta_bar, double gamma_bar);

/// Far-detuned limit of |Im b0 / Re b1|, i.e. Gamma/|A_HF|.
double loss_ratio_limit(const AtomParams& params);

/// |d_ge|^2/(hbar A_HF), with the sign of A_HF.
double physical_scale(const AtomParams& params);

/// Dimensionless -> dimensional coefficients (multiplies by physical_scale).
PolarizabilitySet physical_b(const PolarizabilitySet& set, const AtomParams& params);

/// Inverse of physical_b.
PolarizabilitySet dimensionless_b(const PolarizabilitySet& set, const AtomParams& params);

/// c = w_a * a + w_b * b; both sets must share form and units.
PolarizabilitySet weighted_sum(double weight_a, const PolarizabilitySet& a, double weight_b,
                               const PolarizabilitySet& b);

}  // namespace lightshift

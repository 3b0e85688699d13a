#pragma once

#include <optional>
#include <variant>

#include "lightshift/shift_coefficients.hpp"
#include "lightshift/spin_algebra.hpp"

namespace lightshift {

enum class Handedness { plus, minus };

/// E = A exp(ikz) e_z.
struct SingleLinear {
  double amplitude = 1.0;
  double wavenumber = 1.0;
};

/// E = A exp(ikz) e_+-, with e_+- = (e_x +- i e_y)/sqrt 2.
struct SingleCircular {
  double amplitude = 1.0;
  double wavenumber = 1.0;
  Handedness handedness = Handedness::plus;
};

/// E = (A/sqrt 2)(exp(ikz) e_x + exp(-ikz) e_y).
struct CounterPropCross {
  double amplitude = 1.0;
  double wavenumber = 1.0;
};

/// E = (A/sqrt 2)(e_+ exp(ikz) + e_z exp(i(ky - dw t))).
struct PerpendicularSoc {
  double amplitude = 1.0;
  double wavenumber = 1.0;
  double delta_omega = 0.0;
};

struct RawVector {
  CVector3 e = CVector3::Zero();
};

using FieldConfig =
    std::variant<SingleLinear, SingleCircular, CounterPropCross, PerpendicularSoc, RawVector>;

/// Throws DomainError for a non-positive amplitude or wavenumber.
void validate(const FieldConfig& config);

/// Complex field amplitude at `position` and `time`.
CVector3 field_at(const FieldConfig& config, const Vector3& position, double time = 0.0);

/// Scalar, vector and tensor pieces of a b-form Hamiltonian.
struct HeffParts {
  CMatrix scalar;
  CMatrix vector;
  CMatrix tensor;
};

struct EffectiveHamiltonian {
  CMatrix matrix;
  std::optional<HeffParts> parts;  ///< present for b-form input only
  Units units = Units::dimensionless;
};

/// a-form: a0/4 |E|^2 + i a1/4 I.(E* x E) + a2/4 (E*.I)(E.I), unsymmetrized.
/// b-form: b0/4 |E|^2 + i b1/4 I.(E* x E)
///         + b2/4 [E*_s E_q {I_s, I_q} - (2/3)|E|^2 I^2].
/// Spin operators are dimensionless (hbar = 1).
EffectiveHamiltonian assemble_heff(const PolarizabilitySet& coeffs, const CVector3& field,
                                   const SpinOperators& ops);

/// I_x cos s + I_y sin s.
CMatrix ixy(const SpinOperators& ops, double s);

/// I_+ exp(is) + I_- exp(-is), which equals 2 ixy(ops, -s).
CMatrix ixy_ladder_form(const SpinOperators& ops, double s);

struct CounterPropComponents {
  CMatrix scalar;
  CMatrix vector;
  CMatrix tensor_rotated;  ///< in terms of I_x~ = (I_x - I_y)/sqrt 2, I_y~ = (I_x + I_y)/sqrt 2
  CMatrix tensor_lab;      ///< in terms of I_z^2 and {I_x, I_y}
};

/// Closed-form pieces for the CounterPropCross field at height z.
CounterPropComponents counterprop_components(const PolarizabilitySet& b, double amplitude,
                                             double wavenumber, double z,
                                             const SpinOperators& ops);

struct SocComponents {
  CMatrix vector;
  CMatrix tensor;
};

/// Time-dependent vector and tensor pieces for PerpendicularSoc, with
/// s = ky - kz - dw t.
SocComponents soc_components(const PolarizabilitySet& b, double amplitude, double wavenumber,
                             double delta_omega, const Vector3& position, double time,
                             const SpinOperators& ops);

/// Static pieces in the frame rotating about z at delta_omega. The vector
/// piece includes the frame term delta_omega I_z. delta_omega is in the units
/// of the Hamiltonian.
SocComponents soc_rotating_frame(const PolarizabilitySet& b, double amplitude,
                                 double wavenumber, double delta_omega,
                                 const Vector3& position, const SpinOperators& ops);

/// Re(b1) A^2/8, the rotation rate that removes the I_z term of the static
/// vector piece.
double tuned_delta_omega(const PolarizabilitySet& b, double amplitude);

/// U H U^dagger + delta_omega I_z with U = exp(-i I_z delta_omega t).
CMatrix rotating_frame(const CMatrix& h, const SpinOperators& ops, double delta_omega,
                       double time);

/// U1 H U1^dagger with U1 = exp(-i (kz - ky) I_z); maps ixy(ky - kz) to I_x.
CMatrix gauge_transform(const CMatrix& h, const SpinOperators& ops, double wavenumber,
                        const Vector3& position);

}  // namespace lightshift

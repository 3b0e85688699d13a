#pragma once

#include <array>
#include <numbers>
#include <string_view>

#include "lightshift/spin_algebra.hpp"

namespace lightshift {

/// Physical constants of one species on its ^1S_0 -> ^3P_1 line.
///
/// Frequencies are angular (rad/s). dge_sq is the line strength |d_ge|^2 in
/// any unit the caller keeps consistent.
struct AtomParams {
  HalfInteger spin;        ///< nuclear spin i_I
  double ahf_prime = 0.0;  ///< magnetic-dipole constant A'_HF
  double bhf = 0.0;        ///< electric-quadrupole constant B_HF
  double linewidth = 0.0;  ///< excited-state linewidth Gamma
  double dge_sq = 1.0;

  /// Throws DomainError when a field invariant does not hold.
  void validate() const;
};

/// A_HF with the quadrupole I.J term folded in, and the relative strength
/// gamma of the (I.J)^2 term.
struct DerivedHfConstants {
  double a_hf = 0.0;
  double gamma = 0.0;
};

/// Hyperfine energies of the j = 1 manifold in units of hbar*A_HF.
///
/// For spin 1/2 there is no f = i - 1 level; `lower` then holds the formal
/// value that still appears in the closed-form coefficient denominators.
struct HfEnergies {
  double lower = 0.0;  ///< f = i - 1
  double mid = 0.0;    ///< f = i
  double upper = 0.0;  ///< f = i + 1
  bool lower_is_formal = false;

  /// {lower, mid, upper}.
  std::array<double, 3> as_array() const { return {lower, mid, upper}; }
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angular frequency (rad/s) from a frequency in kHz.
constexpr double angular_from_khz(double khz_over_2pi) { return kTwoPi * 1e3 * khz_over_2pi; }

DerivedHfConstants derive_constants(const AtomParams& params);

HfEnergies hf_energies(HalfInteger spin, double gamma);

/// H_HF/(hbar A_HF) = I.J + gamma (I.J)^2 on the uncoupled basis
/// |m_j> (x) |m_i> with j = 1, both factors in ascending m and the electronic
/// index major. The uniform I^2 J^2 shift is dropped, so the spectrum is
/// exactly hf_energies(spin, gamma).
CMatrix hf_hamiltonian_matrix(HalfInteger spin, double gamma);

namespace presets {

/// ^87Sr: i = 9/2, A'/2pi = -260085 kHz, B/2pi = -35667 kHz, and the linewidth
/// fixed at Gamma/|A_HF| = 3e-5.
AtomParams sr87();

/// ^171Yb: i = 1/2, A'/2pi = 3957.6 MHz, B = 0, Gamma/2pi = 182.4 kHz.
AtomParams yb171();

/// Throws DomainError for an unknown name. Known: "sr87", "yb171".
AtomParams by_name(std::string_view name);

}  // namespace presets

}  // namespace lightshift

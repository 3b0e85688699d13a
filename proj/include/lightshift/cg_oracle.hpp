#pragma once

#include <array>
#include <span>
#include <vector>

#include "lightshift/shift_coefficients.hpp"
#include "lightshift/spin_algebra.hpp"

namespace lightshift {

/// Ground-state dipole elements <1S0| d_s |3P1, m_j> in units of d_ge.
/// Row = Cartesian component (x, y, z), column = m_j in {-1, 0, 1}.
using DipoleTable = Eigen::Matrix<Complex, 3, 3>;

DipoleTable dipole_matrix_elements();

/// Light-shift tensor D_{s,q}: a 3x3 block array of N x N matrices on the
/// ground nuclear-spin manifold, in units of |d_ge|^2/(hbar A_HF).
struct DTensor {
  int dim = 0;
  std::array<std::array<CMatrix, 3>, 3> blocks;

  static DTensor zero(int dim);

  /// Frobenius norm over all nine blocks.
  double norm() const;

  DTensor operator-(const DTensor& other) const;
};

/// Sum-over-states evaluation of D_{s,q} through the coupled |f, m_f> basis.
///
/// The Clebsch-Gordan projections are detuning independent, so they are
/// built once; each evaluation is then a weighted sum of three (two for
/// spin 1/2) pole terms.
class CgOracle {
 public:
  explicit CgOracle(HalfInteger spin);

  HalfInteger spin() const { return spin_; }
  int dim() const { return spin_.twice() + 1; }

  /// Physical hyperfine levels f, ascending.
  const std::vector<HalfInteger>& levels() const { return levels_; }

  /// Throws PoleError for a lossless detuning too close to a physical level.
  DTensor d_tensor(double gamma, const ComplexDetuning& delta) const;

  /// Residue of D at the pole of level f (i.e. the numerator of 1/(delta - E_f)).
  const DTensor& residue(HalfInteger f) const;

 private:
  HalfInteger spin_;
  std::vector<HalfInteger> levels_;
  std::vector<DTensor> residues_;
};

DTensor oracle_d_tensor(HalfInteger spin, double gamma, const ComplexDetuning& delta);

/// Analytic D built from a coefficient set: in b-form
/// b0 delta_sq + i b1 eps_ksq I_k + b2 ({I_s, I_q} - (2/3) delta_sq I^2),
/// in a-form a0 delta_sq + i a1 eps_ksq I_k + a2 I_s I_q.
DTensor d_tensor_from_coefficients(const PolarizabilitySet& coeffs, const SpinOperators& ops);

struct Extraction {
  PolarizabilitySet coefficients;
  double residual = 0.0;
};

/// Hilbert-Schmidt projection of D onto the scalar, vector and
/// symmetric-traceless bases. For spin 1/2 the tensor basis vanishes and b2
/// is reported as 0. The residual is |D - reconstruction| / |D|.
Extraction extract_b_from_d(const DTensor& d, const SpinOperators& ops);

/// H = (1/4) E*_s D_{s,q} E_q.
CMatrix contract(const DTensor& d, const CVector3& field);

/// Max relative deviation between closed-form and extracted b-coefficients
/// over a detuning grid. The tensor coefficient is skipped for spin 1/2,
/// where its operator vanishes identically. Throws DomainError for an empty
/// grid.
double oracle_vs_analytic_deviation(HalfInteger spin, double gamma,
                                    std::span<const double> grid, double gamma_bar);

/// Evenly spaced points on [lo, hi], each moved at least min_gap away from
/// every (formal or physical) hyperfine energy.
std::vector<double> pole_avoiding_grid(HalfInteger spin, double gamma, double lo, double hi,
                                       int points, double min_gap = 0.05);

/// The 200-point grid on [-8, 6] used for cross-checks.
std::vector<double> standard_grid(HalfInteger spin, double gamma);

}  // namespace lightshift

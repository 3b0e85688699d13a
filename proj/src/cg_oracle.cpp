#include "lightshift/cg_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "lightshift/errors.hpp"
#include "lightshift/hyperfine.hpp"

namespace lightshift {

namespace {

constexpr int levi_civita(int k, int s, int q) {
  if (k == s || s == q || k == q) return 0;
  return ((s - k + 3) % 3 == 1) ? 1 : -1;
}

double energy_of(const HfEnergies& e, HalfInteger spin, HalfInteger f) {
  if (f.twice() == spin.twice() + 2) return e.upper;
  if (f.twice() == spin.twice()) return e.mid;
  return e.lower;
}

void require_dim(const DTensor& d, const SpinOperators& ops) {
  if (d.dim != ops.dim) {
    throw DimensionError("tensor dimension " + std::to_string(d.dim) +
                         " does not match spin dimension " + std::to_string(ops.dim));
  }
}

}  // namespace

DipoleTable dipole_matrix_elements() {
  const double r = 1.0 / std::sqrt(2.0);
  DipoleTable d;
  d << Complex(r, 0.0), 0.0, Complex(-r, 0.0),
       Complex(0.0, r), 0.0, Complex(0.0, r),
       0.0, 1.0, 0.0;
  return d;
}

DTensor DTensor::zero(int dim) {
  DTensor t;
  t.dim = dim;
  for (auto& row : t.blocks) {
    for (auto& b : row) b = CMatrix::Zero(dim, dim);
  }
  return t;
}

double DTensor::norm() const {
  double sq = 0.0;
  for (const auto& row : blocks) {
    for (const auto& b : row) sq += b.squaredNorm();
  }
  return std::sqrt(sq);
}

DTensor DTensor::operator-(const DTensor& other) const {
  if (dim != other.dim) throw DimensionError("tensor dimensions differ");
  DTensor out = *this;
  for (int s = 0; s < 3; ++s) {
    for (int q = 0; q < 3; ++q) out.blocks[s][q] -= other.blocks[s][q];
  }
  return out;
}

CgOracle::CgOracle(HalfInteger spin) : spin_(spin) {
  if (spin.twice() < 1) throw DomainError("oracle needs nuclear spin >= 1/2");
  const int n = dim();
  const HalfInteger j = HalfInteger::whole(1);
  const DipoleTable dip = dipole_matrix_elements();

  for (int tf = std::max(spin.twice() - 2, 1); tf <= spin.twice() + 2; tf += 2) {
    const HalfInteger f(tf);
    const ClebschGordanTable cg(j, spin, f);
    DTensor res = DTensor::zero(n);
    for (int tmf = -tf; tmf <= tf; tmf += 2) {
      // amp(s, m_i) = sum_mj <d_s>_{mj} C^{f mf}_{1 mj; i mi}
      Eigen::Matrix<Complex, 3, Eigen::Dynamic> amp =
          Eigen::Matrix<Complex, 3, Eigen::Dynamic>::Zero(3, n);
      for (int a = 0; a < 3; ++a) {
        const HalfInteger mj = HalfInteger::whole(a - 1);
        for (int b = 0; b < n; ++b) {
          const HalfInteger mi(-spin.twice() + 2 * b);
          const double c = cg(mj, mi, HalfInteger(tmf));
          if (c != 0.0) amp.col(b) += c * dip.col(a);
        }
      }
      for (int s = 0; s < 3; ++s) {
        for (int q = 0; q < 3; ++q) {
          res.blocks[s][q] += amp.row(s).adjoint() * amp.row(q);
        }
      }
    }
    levels_.push_back(f);
    residues_.push_back(std::move(res));
  }
}

const DTensor& CgOracle::residue(HalfInteger f) const {
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k] == f) return residues_[k];
  }
  throw DomainError("f = " + f.to_string() + " is not a hyperfine level of spin " +
                    spin_.to_string());
}

DTensor CgOracle::d_tensor(double gamma, const ComplexDetuning& delta) const {
  const HfEnergies e = hf_energies(spin_, gamma);
  DTensor out = DTensor::zero(dim());
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const double ef = energy_of(e, spin_, levels_[k]);
    if (delta.lossless() && std::abs(delta.delta_bar() - ef) <= kPoleEpsilon) {
      throw PoleError("detuning " + std::to_string(delta.delta_bar()) +
                      " hits the hyperfine level f = " + levels_[k].to_string());
    }
    const Complex w = 1.0 / (delta.value() - ef);
    for (int s = 0; s < 3; ++s) {
      for (int q = 0; q < 3; ++q) out.blocks[s][q] += w * residues_[k].blocks[s][q];
    }
  }
  return out;
}

DTensor oracle_d_tensor(HalfInteger spin, double gamma, const ComplexDetuning& delta) {
  return CgOracle(spin).d_tensor(gamma, delta);
}

DTensor d_tensor_from_coefficients(const PolarizabilitySet& coeffs, const SpinOperators& ops) {
  const CMatrix id = ops.identity();
  const CMatrix i2 = ops.squared();
  const bool b_form = coeffs.form == CoefficientForm::b_form;
  DTensor d = DTensor::zero(ops.dim);
  for (int s = 0; s < 3; ++s) {
    for (int q = 0; q < 3; ++q) {
      CMatrix& blk = d.blocks[s][q];
      if (s == q) blk += coeffs.c0 * id;
      for (int k = 0; k < 3; ++k) {
        const int e = levi_civita(k, s, q);
        if (e != 0) blk += Complex(0.0, e) * coeffs.c1 * ops[k];
      }
      if (b_form) {
        blk += coeffs.c2 * (ops[s] * ops[q] + ops[q] * ops[s]);
        if (s == q) blk -= (2.0 / 3.0) * coeffs.c2 * i2;
      } else {
        blk += coeffs.c2 * ops[s] * ops[q];
      }
    }
  }
  return d;
}

Extraction extract_b_from_d(const DTensor& d, const SpinOperators& ops) {
  require_dim(d, ops);
  const double n = ops.dim;

  Complex trace_sum = 0.0;
  for (int s = 0; s < 3; ++s) trace_sum += d.blocks[s][s].trace();
  const Complex b0 = trace_sum / (3.0 * n);

  // sum_{s,q} eps_ksq D_sq = 2 i b1 I_k
  Complex vec_num = 0.0;
  Complex vec_den = 0.0;
  for (int k = 0; k < 3; ++k) {
    CMatrix v = CMatrix::Zero(ops.dim, ops.dim);
    for (int s = 0; s < 3; ++s) {
      for (int q = 0; q < 3; ++q) {
        const int e = levi_civita(k, s, q);
        if (e != 0) v += static_cast<double>(e) * d.blocks[s][q];
      }
    }
    vec_num += (v * ops[k]).trace();
    vec_den += (ops[k] * ops[k]).trace();
  }
  const Complex b1 = vec_num / (Complex(0.0, 2.0) * vec_den);

  PolarizabilitySet unit_tensor;
  unit_tensor.c2 = 1.0;
  const DTensor basis = d_tensor_from_coefficients(unit_tensor, ops);
  Complex ten_num = 0.0;
  double ten_den = 0.0;
  for (int s = 0; s < 3; ++s) {
    for (int q = 0; q < 3; ++q) {
      ten_num += (basis.blocks[s][q].adjoint() * d.blocks[s][q]).trace();
      ten_den += basis.blocks[s][q].squaredNorm();
    }
  }
  const Complex b2 = ten_den > 1e-12 * n ? ten_num / ten_den : Complex(0.0);

  Extraction out;
  out.coefficients.form = CoefficientForm::b_form;
  out.coefficients.c0 = b0;
  out.coefficients.c1 = b1;
  out.coefficients.c2 = b2;
  const double scale = d.norm();
  const double diff = (d - d_tensor_from_coefficients(out.coefficients, ops)).norm();
  out.residual = scale > 0.0 ? diff / scale : diff;
  return out;
}

CMatrix contract(const DTensor& d, const CVector3& field) {
  CMatrix h = CMatrix::Zero(d.dim, d.dim);
  for (int s = 0; s < 3; ++s) {
    for (int q = 0; q < 3; ++q) {
      h += std::conj(field[s]) * field[q] * d.blocks[s][q];
    }
  }
  return 0.25 * h;
}

double oracle_vs_analytic_deviation(HalfInteger spin, double gamma,
                                    std::span<const double> grid, double gamma_bar) {
  if (grid.empty()) throw DomainError("oracle comparison needs a non-empty detuning grid");
  const CgOracle oracle(spin);
  const SpinOperators ops = make_spin_operators(spin);
  const int compared = spin.twice() == 1 ? 2 : 3;
  double worst = 0.0;
  for (double delta_bar : grid) {
    const ComplexDetuning delta(delta_bar, gamma_bar);
    const PolarizabilitySet analytic = b_coefficients(spin, gamma, delta);
    const PolarizabilitySet extracted =
        extract_b_from_d(oracle.d_tensor(gamma, delta), ops).coefficients;
    for (int u = 0; u < compared; ++u) {
      const double dev =
          std::abs(analytic[u] - extracted[u]) / std::max(std::abs(extracted[u]), 1e-300);
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

std::vector<double> pole_avoiding_grid(HalfInteger spin, double gamma, double lo, double hi,
                                       int points, double min_gap) {
  if (points < 2 || !(lo < hi)) throw DomainError("grid needs at least two points and lo < hi");
  const auto poles = hf_energies(spin, gamma).as_array();
  std::vector<double> grid(points);
  for (int k = 0; k < points; ++k) {
    double x = lo + (hi - lo) * k / (points - 1);
    for (double p : poles) {
      if (std::abs(x - p) < min_gap) x = x < p ? p - min_gap : p + min_gap;
    }
    grid[k] = x;
  }
  return grid;
}

std::vector<double> standard_grid(HalfInteger spin, double gamma) {
  return pole_avoiding_grid(spin, gamma, -8.0, 6.0, 200);
}

}  // namespace lightshift

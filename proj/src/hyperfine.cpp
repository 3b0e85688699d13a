#include "lightshift/hyperfine.hpp"

#include <cmath>
#include <string>

#include "lightshift/errors.hpp"

namespace lightshift {

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

// 4 i (2i - 1) j (2j - 1) with j = 1.
double quadrupole_denominator(HalfInteger spin) {
  const double i = spin.value();
  return 4.0 * i * (2.0 * i - 1.0);
}

}  // namespace

void AtomParams::validate() const {
  if (spin.twice() < 1) throw DomainError("nuclear spin must be at least 1/2");
  if (!(linewidth >= 0.0)) throw DomainError("linewidth must be non-negative");
  if (!(dge_sq > 0.0)) throw DomainError("dipole strength dge_sq must be positive");
  if (!std::isfinite(ahf_prime) || !std::isfinite(bhf)) {
    throw DomainError("hyperfine constants must be finite");
  }
  if (spin.twice() == 1 && bhf != 0.0) {
    throw DomainError("quadrupole constant is undefined for spin 1/2 (bhf must be 0)");
  }
}

DerivedHfConstants derive_constants(const AtomParams& params) {
  params.validate();
  DerivedHfConstants out;
  if (params.bhf == 0.0) {
    out.a_hf = params.ahf_prime;
    out.gamma = 0.0;
  } else {
    const double denom = quadrupole_denominator(params.spin);
    out.a_hf = params.ahf_prime + 3.0 * params.bhf / denom;
    if (out.a_hf == 0.0) throw DomainError("derived A_HF vanishes");
    out.gamma = 6.0 * params.bhf / (out.a_hf * denom);
  }
  if (out.a_hf == 0.0) throw DomainError("A_HF vanishes");
  return out;
}

HfEnergies hf_energies(HalfInteger spin, double gamma) {
  const double i = spin.value();
  HfEnergies e;
  e.upper = i * (1.0 + gamma * i);
  e.mid = -(1.0 - gamma);
  e.lower = -(i + 1.0) * (1.0 - gamma * (i + 1.0));
  e.lower_is_formal = spin.twice() < 2;
  return e;
}

CMatrix hf_hamiltonian_matrix(HalfInteger spin, double gamma) {
  const SpinOperators j = make_spin_operators(HalfInteger::whole(1));
  const SpinOperators s = make_spin_operators(spin);
  const int n = 3 * s.dim;
  CMatrix i_dot_j = CMatrix::Zero(n, n);
  for (int k = 0; k < 3; ++k) {
    i_dot_j += kron(j[k], s[k]);
  }
  return i_dot_j + gamma * i_dot_j * i_dot_j;
}

namespace presets {

AtomParams sr87() {
  AtomParams p;
  p.spin = HalfInteger::half(9);
  p.ahf_prime = angular_from_khz(-260085.0);
  p.bhf = angular_from_khz(-35667.0);
  p.dge_sq = 1.0;
  p.linewidth = 3e-5 * std::abs(derive_constants(p).a_hf);
  return p;
}

AtomParams yb171() {
  AtomParams p;
  p.spin = HalfInteger::half(1);
  p.ahf_prime = angular_from_khz(3957.6e3);
  p.bhf = 0.0;
  p.linewidth = angular_from_khz(182.4);
  p.dge_sq = 1.0;
  return p;
}

AtomParams by_name(std::string_view name) {
  if (name == "sr87") return sr87();
  if (name == "yb171") return yb171();
  throw DomainError("unknown atom preset '" + std::string(name) + "'");
}

}  // namespace presets

}  // namespace lightshift

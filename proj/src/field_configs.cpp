#include "lightshift/field_configs.hpp"

#include <cmath>

#include "lightshift/errors.hpp"

namespace lightshift {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(double amplitude, double wavenumber) {
  if (!(amplitude > 0.0)) throw DomainError("field amplitude must be positive");
  if (!(wavenumber > 0.0)) throw DomainError("wavenumber must be positive");
}

CVector3 circular(Handedness h) {
  const double sign = h == Handedness::plus ? 1.0 : -1.0;
  return CVector3(kInvSqrt2, sign * kInvSqrt2 * kI, 0.0);
}

void require_consistent(const SpinOperators& ops) {
  const int n = ops.dim;
  for (int k = 0; k < 3; ++k) {
    if (ops[k].rows() != n || ops[k].cols() != n) {
      throw DimensionError("spin operator matrices do not match dimension " +
                           std::to_string(n));
    }
  }
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

// exp(-i phase I_z), diagonal in the ascending-m basis.
CMatrix z_rotation(const SpinOperators& ops, double phase) {
  Eigen::VectorXcd diag(ops.dim);
  for (int a = 0; a < ops.dim; ++a) diag[a] = std::exp(-kI * phase * ops.iz(a, a).real());
  return diag.asDiagonal();
}

}  // namespace

void validate(const FieldConfig& config) {
  std::visit(Overloaded{
                 [](const SingleLinear& c) { require_positive(c.amplitude, c.wavenumber); },
                 [](const SingleCircular& c) { require_positive(c.amplitude, c.wavenumber); },
                 [](const CounterPropCross& c) { require_positive(c.amplitude, c.wavenumber); },
                 [](const PerpendicularSoc& c) { require_positive(c.amplitude, c.wavenumber); },
                 [](const RawVector& c) {
                   if (!c.e.allFinite()) throw DomainError("field vector must be finite");
                 },
             },
             config);
}

CVector3 field_at(const FieldConfig& config, const Vector3& r, double time) {
  validate(config);
  return std::visit(
      Overloaded{
          [&](const SingleLinear& c) -> CVector3 {
            return c.amplitude * std::exp(kI * c.wavenumber * r.z()) * CVector3::UnitZ();
          },
          [&](const SingleCircular& c) -> CVector3 {
            return c.amplitude * std::exp(kI * c.wavenumber * r.z()) * circular(c.handedness);
          },
          [&](const CounterPropCross& c) -> CVector3 {
            const Complex phase = std::exp(kI * c.wavenumber * r.z());
            return c.amplitude * kInvSqrt2 * CVector3(phase, std::conj(phase), 0.0);
          },
          [&](const PerpendicularSoc& c) -> CVector3 {
            const Complex along_z = std::exp(kI * c.wavenumber * r.z());
            const Complex along_y = std::exp(kI * (c.wavenumber * r.y() - c.delta_omega * time));
            return c.amplitude * kInvSqrt2 *
                   (circular(Handedness::plus) * along_z + CVector3::UnitZ() * along_y);
          },
          [&](const RawVector& c) -> CVector3 { return c.e; },
      },
      config);
}

EffectiveHamiltonian assemble_heff(const PolarizabilitySet& coeffs, const CVector3& e,
                                   const SpinOperators& ops) {
  require_consistent(ops);
  const int n = ops.dim;
  const double intensity = e.squaredNorm();
  // E* x E; Eigen's cross() would conjugate the result.
  const CVector3 ec = e.conjugate();
  const CVector3 cross(ec[1] * e[2] - ec[2] * e[1], ec[2] * e[0] - ec[0] * e[2],
                       ec[0] * e[1] - ec[1] * e[0]);

  CMatrix scalar = 0.25 * coeffs.c0 * intensity * ops.identity();
  CMatrix vector = CMatrix::Zero(n, n);
  for (int k = 0; k < 3; ++k) vector += cross[k] * ops[k];
  vector *= 0.25 * kI * coeffs.c1;

  EffectiveHamiltonian h;
  h.units = coeffs.units;
  if (coeffs.form == CoefficientForm::a_form) {
    CMatrix e_conj_dot = CMatrix::Zero(n, n);
    CMatrix e_dot = CMatrix::Zero(n, n);
    for (int k = 0; k < 3; ++k) {
      e_conj_dot += std::conj(e[k]) * ops[k];
      e_dot += e[k] * ops[k];
    }
    h.matrix = scalar + vector + 0.25 * coeffs.c2 * e_conj_dot * e_dot;
    return h;
  }

  CMatrix tensor = -(2.0 / 3.0) * intensity * ops.squared();
  for (int s = 0; s < 3; ++s) {
    for (int q = 0; q < 3; ++q) {
      tensor += std::conj(e[s]) * e[q] * anticommutator(ops[s], ops[q]);
    }
  }
  tensor *= 0.25 * coeffs.c2;

  h.matrix = scalar + vector + tensor;
  h.parts = HeffParts{std::move(scalar), std::move(vector), std::move(tensor)};
  return h;
}

CMatrix ixy(const SpinOperators& ops, double s) {
  return std::cos(s) * ops.ix + std::sin(s) * ops.iy;
}

CMatrix ixy_ladder_form(const SpinOperators& ops, double s) {
  return ops.raising() * std::exp(kI * s) + ops.lowering() * std::exp(-kI * s);
}

CounterPropComponents counterprop_components(const PolarizabilitySet& b, double amplitude,
                                             double wavenumber, double z,
                                             const SpinOperators& ops) {
  require_consistent(ops);
  const double a2 = amplitude * amplitude;
  const double kz = wavenumber * z;
  const CMatrix i2 = ops.squared();
  const CMatrix ix_t = kInvSqrt2 * (ops.ix - ops.iy);
  const CMatrix iy_t = kInvSqrt2 * (ops.ix + ops.iy);
  const double c = std::cos(kz);
  const double s = std::sin(kz);

  CounterPropComponents out;
  out.scalar = 0.25 * a2 * b.c0 * ops.identity();
  out.vector = 0.25 * a2 * b.c1 * std::sin(2.0 * kz) * ops.iz;
  out.tensor_rotated = 0.5 * b.c2 * a2 * (c * c * iy_t * iy_t + s * s * ix_t * ix_t - i2 / 3.0);
  out.tensor_lab = 0.5 * b.c2 * a2 *
                   (i2 / 6.0 - 0.5 * ops.iz * ops.iz +
                    0.5 * std::cos(2.0 * kz) * anticommutator(ops.ix, ops.iy));
  return out;
}

SocComponents soc_components(const PolarizabilitySet& b, double amplitude, double wavenumber,
                             double delta_omega, const Vector3& r, double time,
                             const SpinOperators& ops) {
  require_consistent(ops);
  const double a2 = amplitude * amplitude;
  const double s = wavenumber * r.y() - wavenumber * r.z() - delta_omega * time;
  const CMatrix in_plane = ixy(ops, s);
  const double root2 = std::sqrt(2.0);

  SocComponents out;
  out.vector = -(a2 / 8.0) * b.c1 * (ops.iz - root2 * in_plane);
  out.tensor = -(a2 / 4.0) * b.c2 *
               (ops.squared() / 6.0 - 0.5 * ops.iz * ops.iz -
                anticommutator(in_plane, ops.iz) / root2);
  return out;
}

SocComponents soc_rotating_frame(const PolarizabilitySet& b, double amplitude,
                                 double wavenumber, double delta_omega, const Vector3& r,
                                 const SpinOperators& ops) {
  SocComponents out = soc_components(b, amplitude, wavenumber, 0.0, r, 0.0, ops);
  out.vector += delta_omega * ops.iz;
  return out;
}

double tuned_delta_omega(const PolarizabilitySet& b, double amplitude) {
  return b.c1.real() * amplitude * amplitude / 8.0;
}

CMatrix rotating_frame(const CMatrix& h, const SpinOperators& ops, double delta_omega,
                       double time) {
  require_consistent(ops);
  if (h.rows() != ops.dim || h.cols() != ops.dim) {
    throw DimensionError("Hamiltonian does not match spin dimension");
  }
  const CMatrix u = z_rotation(ops, delta_omega * time);
  return u * h * u.adjoint() + delta_omega * ops.iz;
}

CMatrix gauge_transform(const CMatrix& h, const SpinOperators& ops, double wavenumber,
                        const Vector3& r) {
  require_consistent(ops);
  if (h.rows() != ops.dim || h.cols() != ops.dim) {
    throw DimensionError("Hamiltonian does not match spin dimension");
  }
  const CMatrix u = z_rotation(ops, wavenumber * (r.z() - r.y()));
  return u * h * u.adjoint();
}

}  // namespace lightshift

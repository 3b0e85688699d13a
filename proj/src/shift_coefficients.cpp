#include "lightshift/shift_coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lightshift/errors.hpp"

namespace lightshift {

namespace {

using XComplex = std::complex<long double>;
using XTriple = std::array<XComplex, 3>;

struct XLevels {
  long double lower;
  long double mid;
  long double upper;
};

XLevels x_levels(HalfInteger spin, double gamma) {
  const long double i = spin.value();
  const long double g = gamma;
  return {-(i + 1) * (1 - g * (i + 1)), -(1 - g), i * (1 + g * i)};
}

XComplex x_value(const ComplexDetuning& delta) {
  return {static_cast<long double>(delta.delta_bar()), -static_cast<long double>(delta.gamma_bar())};
}

Complex to_double(const XComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

PolarizabilitySet from_extended(CoefficientForm form, const XTriple& x) {
  PolarizabilitySet set;
  set.form = form;
  set.c0 = to_double(x[0]);
  set.c1 = to_double(x[1]);
  set.c2 = to_double(x[2]);
  set.extended = x;
  return set;
}

}  // namespace

ComplexDetuning::ComplexDetuning(double delta_bar, double gamma_bar)
    : delta_bar_(delta_bar), gamma_bar_(gamma_bar) {
  if (!std::isfinite(delta_bar) || !std::isfinite(gamma_bar)) {
    throw DomainError("detuning and linewidth must be finite");
  }
  if (gamma_bar < 0.0) throw DomainError("gamma_bar must be non-negative");
}

Complex PolarizabilitySet::operator[](int u) const {
  switch (u) {
    case 0: return c0;
    case 1: return c1;
    case 2: return c2;
    default: throw DimensionError("coefficient index out of range: " + std::to_string(u));
  }
}

void check_off_poles(HalfInteger spin, double gamma, const ComplexDetuning& delta) {
  if (!delta.lossless()) return;
  const HfEnergies e = hf_energies(spin, gamma);
  for (double pole : e.as_array()) {
    if (std::abs(delta.delta_bar() - pole) <= kPoleEpsilon) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "detuning " << delta.delta_bar() << " is within " << kPoleEpsilon
          << " of the hyperfine pole at " << pole;
      throw PoleError(msg.str());
    }
  }
}

PolarizabilitySet a_coefficients(HalfInteger spin, double gamma, const ComplexDetuning& delta) {
  check_off_poles(spin, gamma, delta);
  const XLevels e = x_levels(spin, gamma);
  const long double g = gamma;
  const XComplex d = x_value(delta);
  const XComplex e_plus = (e.upper + e.mid + e.lower) / 2 - d;
  const XComplex e_minus = (e.upper - e.mid + e.lower) / 2 - d;
  const XComplex outer = (d - e.upper) * (d - e.lower);

  return from_extended(CoefficientForm::a_form,
                       {-e_plus / outer, e.mid / outer,
                        (g * e_minus - e.mid * e.mid) / (outer * (d - e.mid))});
}

PolarizabilitySet a_coefficients_expanded(HalfInteger spin, double gamma,
                                          const ComplexDetuning& delta) {
  check_off_poles(spin, gamma, delta);
  const HfEnergies e = hf_energies(spin, gamma);
  const double ii = spin.casimir();
  const Complex d = delta.value();
  const Complex outer = (d - e.upper) * (d - e.lower);

  PolarizabilitySet a;
  a.form = CoefficientForm::a_form;
  a.c0 = (d + 1.0 - gamma * (ii + 1.0)) / outer;
  a.c1 = -(1.0 - gamma) / outer;
  a.c2 = -(1.0 + gamma * (d - 2.0) - gamma * gamma * (ii - 1.0)) / (outer * (d - e.mid));
  return a;
}

PolarizabilitySet b_coefficients(HalfInteger spin, double gamma, const ComplexDetuning& delta) {
  check_off_poles(spin, gamma, delta);
  const XLevels e = x_levels(spin, gamma);
  const long double g = gamma;
  const long double ii = spin.casimir();
  const XComplex d = x_value(delta);
  const XComplex e_plus = (e.upper + e.mid + e.lower) / 2 - d;
  const XComplex e_minus = (e.upper - e.mid + e.lower) / 2 - d;
  const XComplex tensor_numerator = g * e_minus - e.mid * e.mid;
  const XComplex denom = (d - e.upper) * (d - e.mid) * (d - e.lower);

  return from_extended(
      CoefficientForm::b_form,
      {(-3.0L * e_plus * (d - e.mid) + ii * tensor_numerator) / (3.0L * denom),
       (2.0L * e.mid * (d - e.mid) + tensor_numerator) / (2.0L * denom), tensor_numerator / (2.0L * denom)});
}

PolarizabilitySet to_b_form(const PolarizabilitySet& a, HalfInteger spin) {
  if (a.form != CoefficientForm::a_form) throw DomainError("to_b_form expects a-form input");
  XTriple x;
  for (int u = 0; u < 3; ++u) x[u] = XComplex(a[u].real(), a[u].imag());
  if (a.extended) {
    const XTriple& ext = *a.extended;
    if (to_double(ext[0]) == a.c0 && to_double(ext[1]) == a.c1 && to_double(ext[2]) == a.c2) x = ext;
  }
  const long double ii = spin.casimir();
  PolarizabilitySet b = from_extended(
      CoefficientForm::b_form, {x[0] + ii * x[2] / 3.0L, x[1] + x[2] / 2.0L, x[2] / 2.0L});
  b.units = a.units;
  return b;
}

PolarizabilitySet asymptotic_b(HalfInteger spin, double gamma, double delta_bar) {
  const HfEnergies e = hf_energies(spin, gamma);
  const double reach = std::max({std::abs(e.lower), std::abs(e.mid), std::abs(e.upper)});
  if (!(std::abs(delta_bar) > reach)) {
    throw DomainError("far-detuned series needs |delta_bar| > " + std::to_string(reach));
  }
  const double ii = spin.casimir();
  const double x1 = 1.0 / delta_bar;
  const double x2 = x1 * x1;
  const double x3 = x2 * x1;

  PolarizabilitySet b;
  b.form = CoefficientForm::b_form;
  b.c0 = x1 + (2.0 / 3.0) * gamma * ii * x2 +
         (2.0 / 3.0) * ii * (1.0 + gamma * (gamma * ii - 1.0)) * x3;
  b.c1 = -(1.0 - 0.5 * gamma) * x2 +
         0.5 * (1.0 - 4.0 * gamma * ii + gamma * gamma * (3.0 * ii - 1.0)) * x3;
  b.c2 = -0.5 * gamma * x2 + 0.5 * (-1.0 + 4.0 * gamma - gamma * gamma * (ii + 3.0)) * x3;
  return b;
}

LossRates im_b_first_order(HalfInteger spin, double delta_bar, double gamma_bar) {
  check_off_poles(spin, 0.0, ComplexDetuning(delta_bar));
  if (gamma_bar < 0.0) throw DomainError("gamma_bar must be non-negative");
  const HfEnergies e = hf_energies(spin, 0.0);
  const double ii = spin.casimir();
  const double d = delta_bar;
  const double p = (d - e.upper) * (d - e.mid) * (d - e.lower);
  const double p2 = p * p;
  const double shifted = d + 1.0;

  LossRates out;
  out.im0 = (3.0 * std::pow(shifted, 4) + 2.0 * shifted * ii + ii * ii) / (3.0 * p2) * gamma_bar;
  out.im1 = -(4.0 * d * d * d + 13.0 * d * d + 12.0 * d - ii + 3.0) / (2.0 * p2) * gamma_bar;
  out.im2 = -(3.0 * d * d + 4.0 * d - ii + 1.0) / (2.0 * p2) * gamma_bar;
  return out;
}

double loss_ratio_limit(const AtomParams& params) {
  const DerivedHfConstants c = derive_constants(params);
  return params.linewidth / std::abs(c.a_hf);
}

double physical_scale(const AtomParams& params) {
  const DerivedHfConstants c = derive_constants(params);
  return params.dge_sq / (kHbar * c.a_hf);
}

PolarizabilitySet physical_b(const PolarizabilitySet& set, const AtomParams& params) {
  if (set.units != Units::dimensionless) throw DomainError("coefficients are already physical");
  const double scale = physical_scale(params);
  PolarizabilitySet out = set;
  out.units = Units::physical;
  out.c0 *= scale;
  out.c1 *= scale;
  out.c2 *= scale;
  out.extended.reset();
  return out;
}

PolarizabilitySet dimensionless_b(const PolarizabilitySet& set, const AtomParams& params) {
  if (set.units != Units::physical) throw DomainError("coefficients are already dimensionless");
  const double scale = physical_scale(params);
  PolarizabilitySet out = set;
  out.units = Units::dimensionless;
  out.c0 /= scale;
  out.c1 /= scale;
  out.c2 /= scale;
  out.extended.reset();
  return out;
}

PolarizabilitySet weighted_sum(double weight_a, const PolarizabilitySet& a, double weight_b,
                               const PolarizabilitySet& b) {
  if (a.form != b.form || a.units != b.units) {
    throw DomainError("cannot combine coefficient sets of different form or units");
  }
  PolarizabilitySet out = a;
  out.c0 = weight_a * a.c0 + weight_b * b.c0;
  out.c1 = weight_a * a.c1 + weight_b * b.c1;
  out.c2 = weight_a * a.c2 + weight_b * b.c2;
  out.extended.reset();
  return out;
}

}  // namespace lightshift

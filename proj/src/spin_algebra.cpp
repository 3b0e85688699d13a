#include "lightshift/spin_algebra.hpp"

#include <cmath>

#include "lightshift/errors.hpp"

namespace lightshift {

namespace {

int index_of(HalfInteger j, HalfInteger m) { return (m.twice() + j.twice()) / 2; }

// sqrt(j(j+1) - m(m+1)), the raising-operator matrix element, in twice units.
double raising_element(int twice_j, int twice_m) {
  const double quarter = static_cast<double>(twice_j) * (twice_j + 2) -
                         static_cast<double>(twice_m) * (twice_m + 2);
  return quarter <= 0.0 ? 0.0 : 0.5 * std::sqrt(quarter);
}

// sqrt(j(j+1) - m(m-1)).
double lowering_element(int twice_j, int twice_m) {
  return raising_element(twice_j, -twice_m);
}

}  // namespace

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

const CMatrix& SpinOperators::operator[](int k) const {
  switch (k) {
    case 0: return ix;
    case 1: return iy;
    case 2: return iz;
    default: throw DimensionError("spin operator component out of range: " + std::to_string(k));
  }
}

CMatrix SpinOperators::squared() const { return ix * ix + iy * iy + iz * iz; }

SpinOperators make_spin_operators(HalfInteger spin) {
  if (spin.twice() <= 0) {
    throw DomainError("spin operators need spin > 0, got " + spin.to_string());
  }
  const int dim = spin.twice() + 1;
  if (dim > kMaxSpinDimension) {
    throw DomainError("spin manifold dimension " + std::to_string(dim) + " exceeds limit " +
                      std::to_string(kMaxSpinDimension));
  }

  SpinOperators ops;
  ops.spin = spin;
  ops.dim = dim;
  ops.iz = CMatrix::Zero(dim, dim);
  CMatrix raise = CMatrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const int twice_m = -spin.twice() + 2 * a;
    ops.iz(a, a) = 0.5 * twice_m;
    if (a + 1 < dim) raise(a + 1, a) = raising_element(spin.twice(), twice_m);
  }
  const CMatrix lower = raise.adjoint();
  ops.ix = 0.5 * (raise + lower);
  ops.iy = Complex(0.0, -0.5) * (raise - lower);
  return ops;
}

ClebschGordanTable::ClebschGordanTable(HalfInteger j1, HalfInteger j2, HalfInteger f)
    : j1_(j1), j2_(j2), f_(f) {
  if (j1.twice() < 0 || j2.twice() < 0 || !satisfies_triangle(j1, j2, f)) {
    throw DomainError("Clebsch-Gordan triangle rule violated for (" + j1.to_string() + ", " +
                      j2.to_string() + ") -> " + f.to_string());
  }
  const int n1 = j1.twice() + 1;
  const int n2 = j2.twice() + 1;
  const int nf = f.twice() + 1;
  slices_.assign(nf, Eigen::MatrixXd::Zero(n1, n2));

  // Highest weight |f, f>: annihilated by the raising operator. Walk m1 down
  // from j1 (always reachable since f >= j1 - j2).
  Eigen::MatrixXd& top = slices_.back();
  {
    int tm1 = j1.twice();
    int tm2 = f.twice() - tm1;
    double c = 1.0;
    top(index_of(j1, HalfInteger(tm1)), index_of(j2, HalfInteger(tm2))) = c;
    while (tm1 - 2 >= -j1.twice() && tm2 + 2 <= j2.twice()) {
      c = -c * raising_element(j2.twice(), tm2) / raising_element(j1.twice(), tm1 - 2);
      tm1 -= 2;
      tm2 += 2;
      top(index_of(j1, HalfInteger(tm1)), index_of(j2, HalfInteger(tm2))) = c;
    }
    // Condon-Shortley: the m1 = j1 entry is positive, which the start value
    // already fixes.
    top /= top.norm();
  }

  // Lower mf one step at a time.
  for (int k = nf - 1; k > 0; --k) {
    const int tmf = -f.twice() + 2 * k;
    const double norm = lowering_element(f.twice(), tmf);
    const Eigen::MatrixXd& upper = slices_[k];
    Eigen::MatrixXd& next = slices_[k - 1];
    for (int a = 0; a < n1; ++a) {
      const int tm1 = -j1.twice() + 2 * a;
      for (int b = 0; b < n2; ++b) {
        const int tm2 = -j2.twice() + 2 * b;
        if (tm1 + tm2 != tmf - 2) continue;
        double v = 0.0;
        if (a + 1 < n1) v += lowering_element(j1.twice(), tm1 + 2) * upper(a + 1, b);
        if (b + 1 < n2) v += lowering_element(j2.twice(), tm2 + 2) * upper(a, b + 1);
        next(a, b) = v / norm;
      }
    }
  }
}

double ClebschGordanTable::operator()(HalfInteger m1, HalfInteger m2, HalfInteger mf) const {
  if (m1 + m2 != mf) return 0.0;
  if (!is_valid_projection(j1_, m1) || !is_valid_projection(j2_, m2) ||
      !is_valid_projection(f_, mf)) {
    return 0.0;
  }
  return slices_[index_of(f_, mf)](index_of(j1_, m1), index_of(j2_, m2));
}

double clebsch_gordan(HalfInteger j1, HalfInteger j2, HalfInteger m1, HalfInteger m2,
                      HalfInteger f, HalfInteger mf) {
  if (!satisfies_triangle(j1, j2, f)) {
    throw DomainError("Clebsch-Gordan triangle rule violated for (" + j1.to_string() + ", " +
                      j2.to_string() + ") -> " + f.to_string());
  }
  if (!is_valid_projection(j1, m1) || !is_valid_projection(j2, m2) ||
      !is_valid_projection(f, mf)) {
    throw DomainError("inconsistent magnetic quantum numbers for Clebsch-Gordan coefficient");
  }
  if (m1 + m2 != mf) return 0.0;
  return ClebschGordanTable(j1, j2, f)(m1, m2, mf);
}

}  // namespace lightshift

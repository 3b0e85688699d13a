#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lightshift {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector3 = Eigen::Vector3cd;
using Vector3 = Eigen::Vector3d;

/// Largest spin-manifold dimension 2i+1 accepted by make_spin_operators.
inline constexpr int kMaxSpinDimension = 64;

/// Exact half-integer quantum number, stored as twice its value.
///
/// Used both for angular momenta (non-negative) and for magnetic projections
/// (any sign). Arithmetic and comparisons are exact integer operations.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}

  /// The quantum number `twice / 2`, e.g. HalfInteger::half(9) is 9/2.
  static constexpr HalfInteger half(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger whole(int value) { return HalfInteger(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// j(j+1).
  constexpr double casimir() const { return value() * (value() + 1.0); }

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  std::string to_string() const;

 private:
  int twice_ = 0;
};

/// |m| <= j and j - m integral.
constexpr bool is_valid_projection(HalfInteger j, HalfInteger m) {
  return j.twice() >= 0 && m.twice() >= -j.twice() && m.twice() <= j.twice() &&
         (j.twice() - m.twice()) % 2 == 0;
}

/// |j1 - j2| <= j <= j1 + j2 and j1 + j2 + j integral.
constexpr bool satisfies_triangle(HalfInteger j1, HalfInteger j2, HalfInteger j) {
  const int lo = j1.twice() > j2.twice() ? j1.twice() - j2.twice() : j2.twice() - j1.twice();
  return j.twice() >= lo && j.twice() <= j1.twice() + j2.twice() &&
         (j1.twice() + j2.twice() + j.twice()) % 2 == 0;
}

/// Dimensionless (hbar = 1) angular-momentum matrices on the |i, m> basis,
/// ordered by ascending m = -i ... +i.
struct SpinOperators {
  HalfInteger spin;
  int dim = 0;
  CMatrix ix;
  CMatrix iy;
  CMatrix iz;

  /// Cartesian component k = 0, 1, 2 (x, y, z).
  const CMatrix& operator[](int k) const;

  CMatrix identity() const { return CMatrix::Identity(dim, dim); }
  /// ix^2 + iy^2 + iz^2, built from the matrices (not from i(i+1)).
  CMatrix squared() const;
  CMatrix raising() const { return ix + Complex(0.0, 1.0) * iy; }
  CMatrix lowering() const { return ix - Complex(0.0, 1.0) * iy; }
};

/// Angular-momentum matrices for spin `spin`; iz = diag(m) and the ladder
/// elements are sqrt(i(i+1) - m(m+1)). Throws DomainError for spin 0, negative
/// spin or dimension above kMaxSpinDimension.
SpinOperators make_spin_operators(HalfInteger spin);

/// All Clebsch-Gordan coefficients <j1 m1; j2 m2 | f mf> for fixed j1, j2, f,
/// in the Condon-Shortley convention.
///
/// Stored as a dense (2j1+1) x (2j2+1) matrix per mf; rows and columns are
/// ascending m1 and m2, and entry (m1, m2) of slice mf is zero unless
/// m1 + m2 = mf. Built from the stretched state with the ladder recursion.
class ClebschGordanTable {
 public:
  ClebschGordanTable(HalfInteger j1, HalfInteger j2, HalfInteger f);

  HalfInteger j1() const { return j1_; }
  HalfInteger j2() const { return j2_; }
  HalfInteger f() const { return f_; }

  /// Zero for m1 + m2 != mf or out-of-range projections.
  double operator()(HalfInteger m1, HalfInteger m2, HalfInteger mf) const;

 private:
  HalfInteger j1_, j2_, f_;
  // slices_[k] holds mf = -f + k.
  std::vector<Eigen::MatrixXd> slices_;
};

/// <j1 m1; j2 m2 | f mf>. Returns 0 when m1 + m2 != mf. Throws DomainError on
/// triangle-rule violations or inconsistent projections.
double clebsch_gordan(HalfInteger j1, HalfInteger j2, HalfInteger m1, HalfInteger m2,
                      HalfInteger f, HalfInteger mf);

}  // namespace lightshift

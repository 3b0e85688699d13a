#include <doctest.h>

#include "lightshift/errors.hpp"
#include "lightshift/spin_algebra.hpp"
#include "support/reference.hpp"

using namespace lightshift;
using reference::max_abs;

TEST_CASE("HalfInteger arithmetic is exact") {
  const HalfInteger a = HalfInteger::half(9);
  CHECK(a.twice() == 9);
  CHECK(a.value() == 4.5);
  CHECK_FALSE(a.is_integer());
  CHECK(a.casimir() == doctest::Approx(24.75));
  CHECK((a + HalfInteger::half(1)) == HalfInteger::whole(5));
  CHECK((a - HalfInteger::half(1)) == HalfInteger::whole(4));
  CHECK((-a).twice() == -9);
  CHECK(HalfInteger::half(3) < HalfInteger::whole(2));
  CHECK(a.to_string() == "9/2");
  CHECK(HalfInteger::whole(-1).to_string() == "-1");
}

TEST_CASE("projection and triangle predicates") {
  CHECK(is_valid_projection(HalfInteger::half(3), HalfInteger::half(-1)));
  CHECK_FALSE(is_valid_projection(HalfInteger::half(3), HalfInteger::whole(1)));
  CHECK_FALSE(is_valid_projection(HalfInteger::whole(1), HalfInteger::whole(2)));
  CHECK(satisfies_triangle(HalfInteger::whole(1), HalfInteger::half(9), HalfInteger::half(7)));
  CHECK_FALSE(
      satisfies_triangle(HalfInteger::whole(1), HalfInteger::half(9), HalfInteger::half(5)));
  CHECK_FALSE(
      satisfies_triangle(HalfInteger::whole(1), HalfInteger::half(9), HalfInteger::whole(4)));
}

TEST_CASE("spin matrices satisfy the angular-momentum algebra") {
  const Complex i{0.0, 1.0};
  for (int twice = 1; twice <= 19; ++twice) {
    CAPTURE(twice);
    const SpinOperators s = make_spin_operators(HalfInteger(twice));
    CHECK(s.dim == twice + 1);
    CHECK(max_abs(s.ix * s.iy - s.iy * s.ix - i * s.iz) < 1e-12);
    CHECK(max_abs(s.iy * s.iz - s.iz * s.iy - i * s.ix) < 1e-12);
    CHECK(max_abs(s.iz * s.ix - s.ix * s.iz - i * s.iy) < 1e-12);
    const double casimir = HalfInteger(twice).casimir();
    CHECK(max_abs(s.squared() - casimir * s.identity()) < 1e-12);
    for (int k = 0; k < 3; ++k) CHECK(max_abs(s[k] - s[k].adjoint()) == 0.0);
    CHECK(s.iz(0, 0).real() == -0.5 * twice);
    CHECK(max_abs(s.raising() - s.lowering().adjoint()) < 1e-15);
  }
}

TEST_CASE("spin operator guards") {
  CHECK_THROWS_AS(make_spin_operators(HalfInteger(0)), DomainError);
  CHECK_THROWS_AS(make_spin_operators(HalfInteger(-1)), DomainError);
  CHECK_THROWS_AS(make_spin_operators(HalfInteger(kMaxSpinDimension)), DomainError);
  CHECK_NOTHROW(make_spin_operators(HalfInteger(kMaxSpinDimension - 1)));
  CHECK_THROWS_AS(make_spin_operators(HalfInteger::half(1))[3], DimensionError);
}

TEST_CASE("Clebsch-Gordan table agrees with the Racah formula") {
  const int cases[][2] = {{2, 1}, {2, 3}, {2, 9}, {3, 5}, {4, 4}, {1, 1}, {2, 19}};
  for (const auto& c : cases) {
    const int j1 = c[0], j2 = c[1];
    for (int f = std::abs(j1 - j2); f <= j1 + j2; f += 2) {
      const ClebschGordanTable table{HalfInteger(j1), HalfInteger(j2), HalfInteger(f)};
      for (int m1 = -j1; m1 <= j1; m1 += 2) {
        for (int m2 = -j2; m2 <= j2; m2 += 2) {
          for (int mf = -f; mf <= f; mf += 2) {
            CAPTURE(j1);
            CAPTURE(j2);
            CAPTURE(f);
            CAPTURE(m1);
            CAPTURE(m2);
            CAPTURE(mf);
            const double want = reference::racah_cg(j1, m1, j2, m2, f, mf);
            CHECK(table(HalfInteger(m1), HalfInteger(m2), HalfInteger(mf)) ==
                  doctest::Approx(want).epsilon(1e-12).scale(1.0));
          }
        }
      }
    }
  }
}

TEST_CASE("Clebsch-Gordan known values and orthonormality") {
  const HalfInteger one = HalfInteger::whole(1), half = HalfInteger::half(1);
  // <1 0; 1/2 1/2 | 3/2 1/2> = sqrt(2/3), <1 1; 1/2 -1/2 | 1/2 1/2> = sqrt(2/3)
  CHECK(clebsch_gordan(one, half, HalfInteger::whole(0), half, HalfInteger::half(3), half) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(one, half, HalfInteger::whole(1), -half, half, half) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(one, half, HalfInteger::whole(0), half, half, half) ==
        doctest::Approx(-std::sqrt(1.0 / 3.0)));

  const HalfInteger i = HalfInteger::half(7);
  for (int f1 = 5; f1 <= 9; f1 += 2) {
    for (int f2 = 5; f2 <= 9; f2 += 2) {
      const ClebschGordanTable t1{one, i, HalfInteger(f1)}, t2{one, i, HalfInteger(f2)};
      for (int mf = -std::min(f1, f2); mf <= std::min(f1, f2); mf += 2) {
        double overlap = 0.0;
        for (int mj = -2; mj <= 2; mj += 2) {
          const HalfInteger m1(mj), m2(mf - mj), m(mf);
          overlap += t1(m1, m2, m) * t2(m1, m2, m);
        }
        CHECK(overlap == doctest::Approx(f1 == f2 ? 1.0 : 0.0).scale(1.0));
      }
    }
  }
}

TEST_CASE("Clebsch-Gordan guards") {
  const HalfInteger one = HalfInteger::whole(1);
  CHECK_THROWS_AS(ClebschGordanTable(one, HalfInteger::half(9), HalfInteger::half(5)),
                  DomainError);
  CHECK_THROWS_AS(clebsch_gordan(one, HalfInteger::half(1), HalfInteger::whole(2),
                                 HalfInteger::half(1), HalfInteger::half(3),
                                 HalfInteger::half(5)),
                  DomainError);
  CHECK(clebsch_gordan(one, HalfInteger::half(1), HalfInteger::whole(1), HalfInteger::half(1),
                       HalfInteger::half(3), HalfInteger::half(1)) == 0.0);
  const ClebschGordanTable t{one, HalfInteger::half(1), HalfInteger::half(3)};
  CHECK(t(HalfInteger::whole(2), HalfInteger::half(-1), HalfInteger::half(3)) == 0.0);
}

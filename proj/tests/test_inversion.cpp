#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mfold/exemplars.hpp"
#include "mfold/inversion.hpp"
#include "mfold/rng.hpp"
#include "mfold/series.hpp"

using mfold::Complex;
using mfold::InverseCoeffs;
using mfold::MFoldFn;
using mfold::SplitMix64;
using mfold::TruncatedSeries;

TEST_CASE("inverse of z + z^2 term by term") {
  TruncatedSeries f = TruncatedSeries::zero(4);
  f.set_coeff(1, 1.0);
  f.set_coeff(2, 1.0);
  const TruncatedSeries g = invert(f);
  // w - w^2 + 2w^3 - 5w^4 (Catalan numbers with alternating signs).
  CHECK(std::abs(g.coeff(1) - 1.0) < 1e-15);
  CHECK(std::abs(g.coeff(2) + 1.0) < 1e-15);
  CHECK(std::abs(g.coeff(3) - 2.0) < 1e-15);
  CHECK(std::abs(g.coeff(4) + 5.0) < 1e-15);
  CHECK(composition_residual(f, g) < 1e-14);
  CHECK(composition_residual(g, f) < 1e-14);
}

TEST_CASE("invert validates its input") {
  TruncatedSeries not_norm = TruncatedSeries::zero(3);
  not_norm.set_coeff(1, 2.0);
  CHECK_THROWS_AS(invert(not_norm), std::invalid_argument);
  CHECK_THROWS_AS(invert(TruncatedSeries::identity(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(invert(TruncatedSeries::identity(2), 5), std::invalid_argument);
}

TEST_CASE("closed 1-fold inverse coefficients") {
  const InverseCoeffs c = mfold::closed_inverse_1fold(1.0, 0.0, 0.0);
  CHECK(c.b_m1 == Complex{-1.0, 0.0});
  CHECK(c.b_2m1 == Complex{2.0, 0.0});
  CHECK(c.b_3m1 == Complex{-5.0, 0.0});

  const InverseCoeffs d = mfold::closed_inverse_1fold(1.0, 1.0, 1.0);
  CHECK(d.b_m1 == Complex{-1.0, 0.0});
  CHECK(d.b_2m1 == Complex{1.0, 0.0});
  CHECK(d.b_3m1 == Complex{-1.0, 0.0});
}

TEST_CASE("closed m-fold inverse coefficients") {
  // m=2, a3=2, a5=1, a7=0:
  //   b3 = -2, b5 = 3*4 - 1 = 11, b7 = -(12*8 - 8*2 + 0) = -80.
  const InverseCoeffs c = mfold::closed_inverse_mfold(2, 2.0, 1.0, 0.0);
  CHECK(c.b_m1 == Complex{-2.0, 0.0});
  CHECK(c.b_2m1 == Complex{11.0, 0.0});
  CHECK(c.b_3m1 == Complex{-80.0, 0.0});
  CHECK_THROWS_AS(mfold::closed_inverse_mfold(0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("m=1 specialization is bitwise identical to the 1-fold forms") {
  SplitMix64 rng = SplitMix64::stream(3, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex a2 = rng.disk(1.0), a3 = rng.disk(1.0), a4 = rng.disk(1.0);
    const InverseCoeffs general = mfold::closed_inverse_mfold(1, a2, a3, a4);
    const InverseCoeffs direct = mfold::closed_inverse_1fold(a2, a3, a4);
    CHECK(general.b_m1 == direct.b_m1);
    CHECK(general.b_2m1 == direct.b_2m1);
    CHECK(general.b_3m1 == direct.b_3m1);
  }
}

TEST_CASE("closed forms match generic inversion across m") {
  SplitMix64 rng = SplitMix64::stream(1000000, 0);
  const int ms[] = {1, 2, 3, 4, 5};
  for (int trial = 0; trial < 200; ++trial) {
    const int m = ms[trial % 5];
    const Complex a1 = rng.disk(1.0), a2 = rng.disk(1.0), a3 = rng.disk(1.0);
    const MFoldFn f(m, {a1, a2, a3});

    const TruncatedSeries inv = invert(f.embed());
    const MFoldFn g = MFoldFn::from_series(inv, m, 1e-8);
    const InverseCoeffs closed = mfold::closed_inverse_mfold(m, a1, a2, a3);

    CHECK(std::abs(g.coeff(1) - closed.b_m1) < 1e-10);
    CHECK(std::abs(g.coeff(2) - closed.b_2m1) < 1e-10);
    CHECK(std::abs(g.coeff(3) - closed.b_3m1) < 1e-10);
    CHECK(composition_residual(f.embed(), inv) < 1e-10);
  }
}

TEST_CASE("inverting the identity gives the identity") {
  const TruncatedSeries g = invert(TruncatedSeries::identity(6));
  CHECK(g.coeff(1) == Complex{1.0, 0.0});
  for (int k = 2; k <= g.order(); ++k) CHECK(g.coeff(k) == Complex{0.0, 0.0});
}

TEST_CASE("inversion is an involution") {
  SplitMix64 rng = SplitMix64::stream(77, 0);
  for (int m = 1; m <= 5; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      const MFoldFn f(m, {rng.disk(1.0), rng.disk(1.0), rng.disk(1.0)});
      const TruncatedSeries fe = f.embed();
      const TruncatedSeries back = invert(invert(fe));
      REQUIRE(back.order() == fe.order());
      for (int k = 1; k <= fe.order(); ++k) CHECK(std::abs(back.coeff(k) - fe.coeff(k)) < 1e-10);
    }
  }
}

TEST_CASE("inverse preserves m-fold support") {
  const MFoldFn f(3, {Complex{0.4, 0.2}, Complex{-0.1, 0.3}, Complex{0.0, -0.5}});
  const TruncatedSeries inv = invert(f.embed());
  for (int k = 2; k <= inv.order(); ++k)
    if ((k - 1) % 3 != 0) CHECK(std::abs(inv.coeff(k)) < 1e-12);
}

#include "orbw/lfactor.hpp"

#include <doctest.h>

using namespace orbw;

TEST_CASE("canonical form and equality") {
  // t/(t+1) built two ways.
  LaurentPoly n1 = LaurentPoly::term(1, Rat(1));
  LaurentPoly d1 = LaurentPoly::term(1, Rat(1)) + LaurentPoly::constant(Rat(1));
  LaurentRational a = LaurentRational::make(n1, d1);
  LaurentPoly n2 = LaurentPoly::term(3, Rat(2));
  LaurentPoly d2 = LaurentPoly::term(3, Rat(2)) + LaurentPoly::term(2, Rat(2));
  CHECK(a == LaurentRational::make(n2, d2));
  CHECK(a.den.coeff(0) == 1);
  CHECK(a.den.lead() == 1);
}

TEST_CASE("ring arithmetic with exact cancellation") {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    LaurentPoly na, da, nb, db;
    for (int k = 0; k < 3; ++k) {
      na.set(rng.uniform(-3, 3), rng.rat(5));
      nb.set(rng.uniform(-3, 3), rng.rat(5));
      da.set(rng.uniform(0, 3), rng.rat(5));
      db.set(rng.uniform(0, 3), rng.rat(5));
    }
    if (na.is_zero() || nb.is_zero() || da.is_zero() || db.is_zero()) continue;
    LaurentRational R1 = LaurentRational::make(na, da);
    LaurentRational R2 = LaurentRational::make(nb, db);
    if (R1.is_zero() || R2.is_zero()) continue;
    CHECK((R1 * R2) * lr_inverse(R2) == R1);
    CHECK(R1 + R2 - R2 == R1);
  }
}

TEST_CASE("L-factors on the spec examples") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  // L(-s, eta) inert = t/(t+1).
  LFactorSpec eta_minus_s{Rat(-1), -1, Rat(0), 1};
  LaurentRational L1 = build_L(eta_minus_s, F);
  LaurentRational expect =
      LaurentRational::make(LaurentPoly::term(1, Rat(1)),
                            LaurentPoly::term(1, Rat(1)) + LaurentPoly::constant(Rat(1)));
  CHECK(L1 == expect);

  // L(s, trivial) = 1/(1 - t).
  LFactorSpec riemann{Rat(1), 1, Rat(0), 1};
  CHECK(build_L(riemann, F) ==
        LaurentRational::make(LaurentPoly::constant(Rat(1)),
                              LaurentPoly::constant(Rat(1)) - LaurentPoly::term(1, Rat(1))));

  // L(-2s-1, eta^2) inert = (1 - p t^{-2})^{-1}.
  LFactorSpec sq{Rat(1), -2, Rat(-1), 1};
  CHECK(build_L(sq, F) ==
        LaurentRational::make(LaurentPoly::constant(Rat(1)),
                              LaurentPoly::constant(Rat(1)) - LaurentPoly::term(-2, Rat(5))));

  CHECK_THROWS(build_L(LFactorSpec{Rat(1), 1, Rat(1) / Rat(2), 1}, F));
}

TEST_CASE("gamma functional identity across the grid") {
  for (EtaleType et : {EtaleType::inert, EtaleType::split}) {
    BaseField F = BaseField::make(Int(3), et);
    for (long c1 : {-3L, -2L, -1L, 1L, 2L})
      for (long c0 : {-2L, -1L, 0L, 1L, 2L})
        for (long cv : {1L, -1L}) {
          LaurentRational g = gamma_factor(Rat(cv), c1, Rat(c0), F);
          CHECK(g * build_L(LFactorSpec{Rat(cv), c1, Rat(c0), 1}, F) ==
                build_L(LFactorSpec{Rat(1) / Rat(cv), -c1, Rat(1 - c0), 1}, F));
        }
  }
}

TEST_CASE("holo_at values and pole orders") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  LaurentRational a = LaurentRational::make(
      LaurentPoly::term(1, Rat(1)), LaurentPoly::term(1, Rat(1)) + LaurentPoly::constant(Rat(1)));
  HoloResult h = holo_at(a, F.p, 0);  // t = 1
  CHECK(h.order == 0);
  CHECK(h.value == Rat(1) / Rat(2));

  LaurentRational b = LaurentRational::make(
      LaurentPoly::constant(Rat(1)), LaurentPoly::constant(Rat(1)) - LaurentPoly::term(1, Rat(1)));
  CHECK(holo_at(b, F.p, 0).order == 1);

  CHECK(holo_at(LaurentRational::constant(Rat(1)), F.p, 3).value == 1);
}

TEST_CASE("series expansion windows") {
  // 1/(1-t) at 0: all ones; t/(t+1) at infinity: t^0 - t^{-1} + t^{-2} ...
  LaurentRational geo = geometric_series(Rat(1), 1);
  auto s = series_window(geo, 0, 4, true);
  for (long e = 0; e <= 4; ++e) CHECK(s[e] == 1);
  LaurentRational a = LaurentRational::make(
      LaurentPoly::term(1, Rat(1)), LaurentPoly::term(1, Rat(1)) + LaurentPoly::constant(Rat(1)));
  auto w = series_window(a, -3, 0, false);
  CHECK(w[0] == 1);
  CHECK(w[-1] == -1);
  CHECK(w[-2] == 1);
  CHECK(w[-3] == -1);
}

TEST_CASE("central L-factor products and the plus/minus symmetry") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  // n=1 trivial xi inert: L^+ = t/(t+1).
  LaurentRational Lp = L_central_block(1, Rat(-1), 1, +1, F);
  CHECK(Lp == LaurentRational::make(LaurentPoly::term(1, Rat(1)),
                                    LaurentPoly::term(1, Rat(1)) + LaurentPoly::constant(Rat(1))));
  // n=2: t/(t+1) * (1 - p t^{-2})^{-1}.
  LaurentRational Lp2 = L_central_block(2, Rat(-1), 1, +1, F);
  LaurentRational f2 = LaurentRational::make(
      LaurentPoly::constant(Rat(1)),
      LaurentPoly::constant(Rat(1)) - LaurentPoly::term(-2, Rat(5)));
  CHECK(Lp2 == Lp * f2);
  // minus = plus under t -> 1/t and chi -> chi^{-1}.
  for (int m : {1, 2, 3}) {
    LaurentRational minus = L_central_block(m, Rat(-1), 1, -1, F);
    LaurentRational plus_inv = lr_subst_t_inverse(L_central_block(m, Rat(-1), 1, +1, F));
    CHECK(minus == plus_inv);
  }
}

TEST_CASE("residue-degree scaling of L-factors") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  // Over the residue-degree-2 extension eta pulls back trivially.
  LFactorSpec sp{Rat(1), -1, Rat(0), 2};
  CHECK(build_L(sp, F) ==
        LaurentRational::make(LaurentPoly::constant(Rat(1)),
                              LaurentPoly::constant(Rat(1)) - LaurentPoly::term(-2, Rat(1))));
  CHECK(zeta_n(F, 2) == Rat(1) / ((Rat(1) - Rat(1) / Rat(3)) * (Rat(1) - Rat(1) / Rat(9))));
}

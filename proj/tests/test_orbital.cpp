#include "orbw/oracle.hpp"

#include <doctest.h>

using namespace orbw;

namespace {

LaurentRational one_over_one_plus_t() {
  return LaurentRational::make(LaurentPoly::constant(Rat(1)),
                               LaurentPoly::constant(Rat(1)) + LaurentPoly::term(1, Rat(1)));
}

}  // namespace

TEST_CASE("f_phi of the unit function is the unit of F^n") {
  for (int n : {1, 2}) {
    BaseField F = BaseField::make(Int(3), EtaleType::inert);
    LatticeCosetFunction phi =
        LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, n, Rat(1)});
    LatticeCosetFunction f = f_phi(F, phi, Rat(0), UnramifiedCharacter{Rat(1)}, n);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].weight == 1);
    for (const auto& c : f.terms[0].center) CHECK(c == 0);
    for (int d : f.terms[0].depths) CHECK(d == 0);
    // lambda outside the lattice kills everything.
    LatticeCosetFunction g = f_phi(F, phi, Rat(1) / Rat(3), UnramifiedCharacter{Rat(1)}, n);
    CHECK(g.terms.empty());
  }
}

TEST_CASE("f_phi of the shrunk lattice at n=1") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  LatticeCosetFunction phi =
      LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, 1, Rat(1)}, 1);
  LatticeCosetFunction f = f_phi(F, phi, Rat(0), UnramifiedCharacter{Rat(1)}, 1);
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms[0].weight == 1);
  CHECK(f.terms[0].depths == std::vector<int>{1});
  // Support concentrated off the orbit contributes nothing: a unit center in
  // the u-slot can never be reached from Z_lambda^+.
  LatticeCosetFunction off = LatticeCosetFunction::indicator(
      Ambient{SpaceKind::tilde_gl, 1, Rat(1)}, {Rat(0), Rat(0), Rat(1)}, 1);
  CHECK(f_phi(F, off, Rat(0), UnramifiedCharacter{Rat(1)}, 1).terms.empty());
}

TEST_CASE("unramified central integrals match the spec values at n=1") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  LatticeCosetFunction phi =
      LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, 1, Rat(1)});
  CentralElement Z{1, +1, Rat(0), std::nullopt};
  LaurentRational I = orbital_central(F, Z, phi, xi);
  // t/(t+1)
  CHECK(I == LaurentRational::term(1, Rat(1)) * one_over_one_plus_t());
  CHECK(I == L_central(F, xi, 1, +1));
}

TEST_CASE("twist rule for Z.g follows the change of variable") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  LatticeCosetFunction phi =
      LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, 1, Rat(1)});
  MatQ g(1, 1);
  g.at(0, 0) = Rat(3);
  CentralElement Z{1, +1, Rat(0), std::nullopt};
  CentralElement Zg{1, +1, Rat(0), g};
  LaurentRational I = orbital_central(F, Z, phi, xi);
  LaurentRational Ig = orbital_central(F, Zg, phi, xi);
  // I_{Z} = (xi eta)(det g) |det g|^s I_{Z.g}:  |det g|^s = t.
  Rat chi_g = xi.eval(F, Rat(3)) * F.eta(Rat(3));
  CHECK(I == chi_g * (LaurentRational::term(1, Rat(1)) * Ig));
  // Cross-check the twisted value against the oracle on the moved element.
  OracleOptions opt{6, 9};
  CHECK(Ig == oracle_integrate(F, Zg.element(), phi, xi, opt));
}

TEST_CASE("twist covariance under unit and uniformizer translations at n=1") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  Rng rng(21);
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  for (int trial = 0; trial < 5; ++trial) {
    LatticeCosetFunction phi = LatticeCosetFunction::std_lattice(amb);
    phi = lcf_add(F, phi,
                  LatticeCosetFunction::indicator(amb, {Rat(trial), rng.rat(2), rng.rat(2)}, 1,
                                                  Rat(rng.uniform(1, 3))));
    CentralElement Z{1, +1, Rat(0), std::nullopt};
    LaurentRational base = orbital_central(F, Z, phi, xi);
    // Unit translation: R(u) phi has the same integral.
    MatQ u(1, 1);
    u.at(0, 0) = Rat(2);
    CHECK(orbital_central(F, Z, act_unit(F, phi, u), xi) == base);
    // Uniformizer translation: I(R(p) phi) = chi(p)^{-1} t^{-1} I(phi).
    LatticeCosetFunction moved = act_scalar_power(F, phi, 1);
    Rat chi_p = xi.at_p * F.eta_at_p();
    CHECK(orbital_central(F, Z, moved, xi) ==
          (Rat(1) / chi_p) * (LaurentRational::term(-1, Rat(1)) * base));
  }
}

TEST_CASE("rs orbital integrals: unit case, linearity and oracle agreement") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  LatticeCosetFunction phi = LatticeCosetFunction::std_lattice(amb);
  TildeGl X = TildeGl::zero(1);
  X.A.at(0, 0) = 1;
  X.v[0] = 1;
  X.u[0] = 1;
  CHECK(orbital_rs(F, X, phi, xi) == LaurentRational::constant(Rat(1)));
  CHECK(orbital_rs(F, X, lcf_scale(Rat(7) / Rat(2), phi), xi) ==
        LaurentRational::constant(Rat(7) / Rat(2)));

  // uv = p: finite Laurent polynomial, matching the oracle.
  TildeGl Y = X;
  Y.u[0] = 3;
  LaurentRational I = orbital_rs(F, Y, phi, xi);
  OracleOptions opt{6, 9};
  CHECK(I == oracle_integrate(F, Y, phi, xi, opt));
  CHECK(I.den == Poly::constant(Rat(1)));  // entire: finite Laurent polynomial
  // Shells j in {-1, 0} weighted by eta(p)^j t^j: I = 1 - t^{-1}, vanishing
  // at s = 0 as the odd-valuation matching predicts.
  CHECK(I == LaurentRational::constant(Rat(1)) - LaurentRational::term(-1, Rat(1)));
  CHECK(holo_at(I, F.p, 0).value == 0);
  // The split side counts v(m) + 1 = 2 shells without signs.
  BaseField Fs = BaseField::make(Int(3), EtaleType::split);
  CHECK(orbital_rs(Fs, Y, phi, xi) ==
        LaurentRational::constant(Rat(1)) + LaurentRational::term(-1, Rat(1)));
}

TEST_CASE("rs integrals at n=2 with non-unit invariants agree with the oracle") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  Ambient amb{SpaceKind::tilde_gl, 2, Rat(1)};
  LatticeCosetFunction phi = LatticeCosetFunction::std_lattice(amb);
  QuotientPoint a;
  a.char_coeffs = {Rat(2), Rat(-3)};
  a.moments = {Rat(1), Rat(0)};  // d_2 = -1 ... Hankel [[1,0],[0,m2]]
  std::vector<Rat> ext = extend_moments(a, 4);
  REQUIRE(hankel_det(ext, 2) != 0);
  TildeGl X = realize_rs(a);
  LaurentRational I = orbital_rs(F, X, phi, xi);
  OracleOptions opt{6, 9};
  CHECK(I == oracle_integrate(F, X, phi, xi, opt));
}

TEST_CASE("general route: unramified descent data gives I_normalized = 1") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  // Mixed point with an inert quadratic factor: charpoly (x^2 - x - 1)(x^2+1),
  // rs part of rank 2.
  QuotientPoint a;
  Poly f = (Poly::x() * Poly::x() - Poly::x() - Poly::constant(Rat(1))) *
           (Poly::x() * Poly::x() + Poly::constant(Rat(1)));
  for (int i = 0; i < 4; ++i) a.char_coeffs.push_back(f.coeff(i));
  a.moments = {Rat(1), Rat(0), Rat(1), Rat(1)};
  // Moments follow the rank-2 recurrence of x^2 - x - 1: 1, 0, 1, 1.
  DescentData dd = descend_auto(a);
  CHECK(dd.r == 2);
  REQUIRE(dd.k() == 1);
  CHECK(dd.factors[0].deg() == 2);
  auto reps = orbit_representatives(a, dd);
  REQUIRE(reps.size() == 2);
  for (const auto& rep : reps) {
    SliceFunction phi;
    GeneralOrbitalResult res = orbital_general(F, rep, dd, phi, xi);
    CHECK(res.I_normalized == LaurentRational::constant(Rat(1)));
    HoloResult h = holo_at(res.I_normalized, F.p, 0);
    CHECK(h.order == 0);
  }
}

TEST_CASE("the worked n=2 minus representative against L and the oracle series") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  QuotientPoint a;
  a.char_coeffs = {Rat(2), Rat(-3)};
  a.moments = {Rat(1), Rat(1)};
  DescentData dd = descend_auto(a);
  auto reps = orbit_representatives(a, dd);
  REQUIRE(reps.size() == 2);
  const OrbitRep& minus = reps[1];
  REQUIRE(minus.epsilon == std::vector<int>{-1});
  SliceFunction sf;
  GeneralOrbitalResult res = orbital_general(F, minus, dd, sf, xi);
  // L_X = L(s, xi eta) = 1/(1 + t) at p inert with trivial xi.
  CHECK(res.L == one_over_one_plus_t());
  CHECK(res.I == res.L);  // unramified data
  // Truncated oracle cross-check through the Laurent series around t = 0.
  auto series = oracle_series(F, minus.X, LatticeCosetFunction::std_lattice(
                                              Ambient{SpaceKind::tilde_gl, 2, Rat(1)}),
                              xi, 0, 4);
  auto expect = series_window(res.I, 0, 4, true);
  for (long w = 0; w <= 4; ++w) CHECK(series[w] == expect[w]);
}

TEST_CASE("I_X depends only on the orbit closure: quotient cutoff invariance") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  // Refine 1_Lambda to depth 2 and keep only the cells whose quotient point
  // agrees with q(Z_0^+) = (charpoly x, moment 0) modulo p.
  LatticeCosetFunction phi = LatticeCosetFunction::std_lattice(amb);
  LatticeCosetFunction cut = LatticeCosetFunction::zero(amb);
  for (long aa = 0; aa < 9; ++aa)
    for (long vv = 0; vv < 9; ++vv)
      for (long uu = 0; uu < 9; ++uu) {
        // Quotient of (a, v, u): charpoly coefficient -a, moment uv.
        if (aa % 3 != 0) continue;
        if ((uu * vv) % 3 != 0) continue;
        CosetTerm t;
        t.weight = 1;
        t.center = {Rat(aa), Rat(vv), Rat(uu)};
        t.depths = {2, 2, 2};
        cut.terms.push_back(t);
      }
  canonicalize(F, cut);
  CentralElement Z{1, +1, Rat(0), std::nullopt};
  CHECK(orbital_central(F, Z, cut, xi) == orbital_central(F, Z, phi, xi));
}

TEST_CASE("oracle handles general n=1 elements with certified tails") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(-1)};
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  LatticeCosetFunction phi = LatticeCosetFunction::std_lattice(amb);
  OracleOptions opt{6, 9};
  // Z_lambda^- with lambda = p.
  CentralElement Zm{1, -1, Rat(3), std::nullopt};
  CHECK(oracle_integrate(F, Zm.element(), phi, xi, opt) == orbital_central(F, Zm, phi, xi));
  // Non-regular input is rejected.
  TildeGl bad = TildeGl::zero(1);
  bad.A.at(0, 0) = 1;
  CHECK_THROWS(oracle_integrate(F, bad, phi, xi, opt));
}

TEST_CASE("desk-scale limits are explicit") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  LatticeCosetFunction phi =
      LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, 3, Rat(1)});
  CHECK_THROWS_AS(f_phi(F, phi, Rat(0), xi, 3), std::invalid_argument);
  TildeGl X = TildeGl::central_rep(3, Rat(0), +1);
  CHECK_THROWS_AS(oracle_integrate(F, X, phi, xi, OracleOptions{}), std::invalid_argument);
}

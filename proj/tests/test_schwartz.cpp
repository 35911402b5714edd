#include "orbw/schwartz.hpp"

#include <doctest.h>

using namespace orbw;

TEST_CASE("membership, canonicalization and linearity") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  LatticeCosetFunction f = LatticeCosetFunction::std_lattice(amb);
  CHECK(evaluate(F, f, {Rat(1), Rat(2), Rat(0)}) == 1);
  CHECK(evaluate(F, f, {Rat(1) / Rat(3), Rat(0), Rat(0)}) == 0);

  // Center reduction merges congruent cosets.
  LatticeCosetFunction g = LatticeCosetFunction::indicator(amb, {Rat(3), Rat(0), Rat(0)}, 1);
  LatticeCosetFunction h = LatticeCosetFunction::indicator(amb, {Rat(0), Rat(0), Rat(0)}, 1, Rat(2));
  LatticeCosetFunction sum = lcf_add(F, g, h);
  REQUIRE(sum.terms.size() == 1);
  CHECK(sum.terms[0].weight == 3);

  LatticeCosetFunction z = lcf_add(F, g, lcf_scale(Rat(-1), g));
  CHECK(z.terms.empty());
}

TEST_CASE("Fourier transform of the standard lattice is itself") {
  for (EtaleType et : {EtaleType::inert, EtaleType::split}) {
    BaseField F = BaseField::make(Int(5), et);
    for (int n : {1, 2}) {
      Ambient amb{SpaceKind::tilde_gl, n, Rat(1)};
      LatticeCosetFunction f = LatticeCosetFunction::std_lattice(amb);
      LatticeCosetFunction ff = fourier(F, f);
      REQUIRE(ff.terms.size() == 1);
      CHECK(ff.terms[0].weight == 1);
      CHECK(ff.terms[0].phase.empty());
      for (int d : ff.terms[0].depths) CHECK(d == 0);
    }
  }
}

TEST_CASE("Fourier of a shrunk lattice rescales by the covolume") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};  // dim = n^2 + 2n = 3
  LatticeCosetFunction f = LatticeCosetFunction::std_lattice(amb, 1);
  LatticeCosetFunction ff = fourier(F, f);
  REQUIRE(ff.terms.size() == 1);
  CHECK(ff.terms[0].weight == pow_p(F.p, -3));
  for (int d : ff.terms[0].depths) CHECK(d == -1);
}

TEST_CASE("double transform is reflection, pointwise on samples") {
  Rng rng(19);
  for (EtaleType et : {EtaleType::inert, EtaleType::split}) {
    BaseField F = BaseField::make(Int(3), et);
    Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
    for (int trial = 0; trial < 20; ++trial) {
      LatticeCosetFunction f = LatticeCosetFunction::zero(amb);
      for (int t = 0; t < 2; ++t) {
        CosetTerm ct;
        ct.weight = Rat(rng.uniform(-4, 4));
        if (ct.weight == 0) ct.weight = 1;
        for (int i = 0; i < 3; ++i) {
          ct.center.push_back(rng.rat(4));
          ct.depths.push_back(static_cast<int>(rng.uniform(0, 2)));
        }
        f.terms.push_back(ct);
      }
      canonicalize(F, f);
      LatticeCosetFunction ff = fourier(F, fourier(F, f));
      LatticeCosetFunction rf = reflect(F, f);
      for (int s = 0; s < 10; ++s) {
        std::vector<Rat> pt{rng.rat(6), rng.rat(6), rng.rat(6)};
        CHECK(evaluate(F, ff, pt) == evaluate(F, rf, pt));
      }
    }
  }
}

TEST_CASE("u_tilde pairing and self-duality by Gram scalar") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  Ambient unit{SpaceKind::u_tilde, 1, Rat(1)};
  Ambient ram{SpaceKind::u_tilde, 1, Rat(3)};
  LatticeCosetFunction f1 = LatticeCosetFunction::std_lattice(unit);
  LatticeCosetFunction g1 = fourier(F, f1);
  REQUIRE(g1.terms.size() == 1);
  CHECK(g1.terms[0].depths == std::vector<int>{0, 0, 0});
  CHECK(g1.terms[0].weight == 1);
  // Gram scalar p: the v-block dual picks up p^{-1} and the volume p^{-1}.
  LatticeCosetFunction f2 = LatticeCosetFunction::std_lattice(ram);
  LatticeCosetFunction g2 = fourier(F, f2);
  REQUIRE(g2.terms.size() == 1);
  CHECK(g2.terms[0].depths == std::vector<int>{0, -1, -1});
  CHECK(g2.terms[0].weight == pow_p(F.p, -1));
  // Involution still holds pointwise.
  LatticeCosetFunction ff = fourier(F, g2);
  Rng rng(4);
  for (int s = 0; s < 10; ++s) {
    std::vector<Rat> pt{rng.rat(5), rng.rat(5), rng.rat(5)};
    CHECK(evaluate(F, ff, pt) == evaluate(F, reflect(F, f2), pt));
  }
}

TEST_CASE("unit action transports cosets exactly") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  Ambient amb{SpaceKind::tilde_gl, 2, Rat(1)};
  Rng rng(8);
  LatticeCosetFunction f = LatticeCosetFunction::indicator(
      amb, {Rat(1), Rat(0), Rat(2), Rat(1), Rat(0), Rat(1), Rat(2), Rat(0)}, 1);
  MatQ g(2, 2);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  g.at(1, 0) = 0;
  g.at(1, 1) = 1;
  LatticeCosetFunction rf = act_unit(F, f, g);
  for (int trial = 0; trial < 200; ++trial) {
    TildeGl X = TildeGl::zero(2);
    for (auto& e : X.A.e) e = rng.rat(4);
    for (auto& e : X.v) e = rng.rat(4);
    for (auto& e : X.u) e = rng.rat(4);
    CHECK(evaluate(F, rf, flatten(X)) == evaluate(F, f, flatten(act(X, g))));
  }
  CHECK_THROWS(act_unit(F, f, [&] {
    MatQ s(2, 2);
    s.at(0, 0) = 3;
    s.at(1, 1) = 1;
    return s;
  }()));
}

TEST_CASE("central scalar action shifts slots") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  LatticeCosetFunction f = LatticeCosetFunction::std_lattice(amb);
  LatticeCosetFunction rf = act_scalar_power(F, f, 1);
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> pt{rng.rat(4), rng.rat(4), rng.rat(4)};
    // X.(p) = (a, v/p, p u).
    std::vector<Rat> moved{pt[0], pt[1] / Rat(3), pt[2] * Rat(3)};
    CHECK(evaluate(F, rf, pt) == evaluate(F, f, moved));
  }
}

TEST_CASE("theta transport swaps the v and u slots") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  Ambient amb{SpaceKind::tilde_gl, 2, Rat(1)};
  Rng rng(12);
  LatticeCosetFunction f = LatticeCosetFunction::indicator(
      amb, {Rat(0), Rat(1), Rat(0), Rat(0), Rat(2), Rat(0), Rat(0), Rat(1)}, 1);
  LatticeCosetFunction tf = theta_transport(F, f);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> pt;
    for (int i = 0; i < 8; ++i) pt.push_back(rng.rat(4));
    CHECK(evaluate(F, tf, pt) == evaluate(F, f, theta_point(amb, pt)));
  }
}

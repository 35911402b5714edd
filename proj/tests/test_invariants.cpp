#include "orbw/elements.hpp"

#include <doctest.h>

using namespace orbw;

namespace {

TildeGl mk(int n, std::vector<Rat> A, std::vector<Rat> v, std::vector<Rat> u) {
  TildeGl X = TildeGl::zero(n);
  X.A.e = std::move(A);
  X.v = std::move(v);
  X.u = std::move(u);
  return X;
}

}  // namespace

TEST_CASE("delta on central representatives") {
  CHECK(delta_plus(TildeGl::central_rep(1, Rat(0), +1)) == 1);
  CHECK(delta_plus(TildeGl::central_rep(2, Rat(0), +1)) == -1);  // det [[0,1],[1,0]]
  CHECK(delta_minus(TildeGl::central_rep(2, Rat(0), +1)) == 0);
  TildeGl X = mk(2, {Rat(1), Rat(1), Rat(0), Rat(2)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)});
  CHECK(delta_plus(X) == 0);  // Av = v
}

TEST_CASE("quotient point, d_r and stratum on the spec examples") {
  TildeGl X = mk(2, {Rat(1), Rat(0), Rat(0), Rat(2)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
  QuotientData q = quotient_point(X);
  CHECK(q.a.char_coeffs == std::vector<Rat>{Rat(2), Rat(-3)});
  CHECK(q.a.moments == std::vector<Rat>{Rat(2), Rat(3)});
  CHECK(q.d_r == std::vector<Rat>{Rat(2), Rat(1)});
  CHECK(q.r == 2);

  TildeGl Z = mk(2, {Rat(7), Rat(0), Rat(0), Rat(7)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)});
  QuotientData qz = quotient_point(Z);
  CHECK(qz.r == 0);
  CHECK(is_central(qz.a));
  CHECK(qz.a.char_coeffs == std::vector<Rat>{Rat(49), Rat(-14)});

  TildeGl Y = mk(2, {Rat(1), Rat(0), Rat(0), Rat(2)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)});
  QuotientData qy = quotient_point(Y);
  CHECK(qy.a.moments == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(qy.d_r[1] == 0);
  CHECK(qy.r == 1);
}

TEST_CASE("regularity by the linearized stabilizer") {
  for (int n : {1, 2, 3}) {
    CHECK(is_regular(TildeGl::central_rep(n, Rat(2), +1)));
    CHECK(is_regular(TildeGl::central_rep(n, Rat(0), -1)));
    CHECK_FALSE(is_regular(TildeGl::zero(n)));
  }
  // delta^+ != 0 forces regularity.
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    TildeGl X = TildeGl::zero(n);
    for (auto& e : X.A.e) e = Rat(rng.uniform(-3, 3));
    for (auto& e : X.v) e = Rat(rng.uniform(-3, 3));
    for (auto& e : X.u) e = Rat(rng.uniform(-3, 3));
    if (delta_plus(X) != 0) CHECK(is_regular(X));
  }
}

TEST_CASE("gl_{n+1} splits as tilde_gl_n x F equivariantly") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    MatQ M(n + 1, n + 1);
    for (auto& e : M.e) e = rng.rat(5);
    GlNext Y = GlNext::from_matrix(M);
    CHECK(Y.full() == M);
    MatQ g(n, n);
    do {
      for (auto& e : g.e) e = Rat(rng.uniform(-3, 3));
    } while (det(g) == 0);
    // Action through the (n+1)-embedding g -> diag(g, 1) matches the split action.
    MatQ gbig = MatQ::identity(n + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gbig.at(i, j) = g.at(i, j);
    GlNext Yg = GlNext::from_matrix(inverse(gbig) * M * gbig);
    CHECK(Yg.X == act(Y.X, g));
    CHECK(Yg.d == Y.d);
  }
}

TEST_CASE("S elements verify x x^c = 1 and the e_{n+1} moment identities") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  CHECK_THROWS(SElement::make(F, et_scale(F, EtaleScalar::from_base(F, Rat(2)),
                                          MatE::identity(F, 2))));
  // Delta^+(x) = (-1)^n det(e, xe, ..., x^n e) via the block identity.
  CayleyParams cp = CayleyParams::validated(F, EtaleScalar{Rat(0), Rat(1)},
                                            EtaleScalar{Rat(-1), Rat(0)});
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 2));
    MatQ M(n + 1, n + 1);
    for (auto& e : M.e) e = Rat(rng.uniform(-3, 3));
    SElement x;
    try {
      x = cayley_to_group(F, cp, GlNext::from_matrix(M));
    } catch (const std::domain_error&) {
      continue;
    }
    // eq: Delta^+(x) = (-1)^n det(x e, x^2 e, ..., x^n e ; e) block identity:
    // check the direct Krylov form against the power-column form.
    int m = n + 1;
    MatE K(m, m);
    MatE pw = MatE::identity(F, m);
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i < m; ++i) K.at(i, j) = pw.at(i, m - 1);
      pw = et_mul(F, pw, x.x);
    }
    EtaleScalar direct = et_det(F, K);
    EtaleScalar dp = Delta_plus(F, x);
    EtaleScalar sign = (n % 2 == 0) ? EtaleScalar::one(F)
                                    : et_neg(F, EtaleScalar::one(F));
    // det(e, xe, ..., x^n e) = (-1)^n-normalized Delta^+ per the block identity.
    CHECK(et_mul(F, sign, direct) == dp);
  }
}

TEST_CASE("Cayley chart errors") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  CayleyParams cp = CayleyParams::validated(F, EtaleScalar{Rat(0), Rat(1)},
                                            EtaleScalar{Rat(1), Rat(0)});
  // Y = 0 maps to -sigma; with sigma = 1 the inverse chart at x = -sigma is fine,
  // but x = +sigma is singular.
  GlNext zero = GlNext::from_matrix(MatQ(2, 2));
  SElement img = cayley_to_group(F, cp, zero);
  MatE expect = et_scale(F, et_neg(F, cp.sigma), MatE::identity(F, 2));
  CHECK(img.x == expect);
  SElement sig = SElement::make(F, et_scale(F, cp.sigma, MatE::identity(F, 2)));
  CHECK_THROWS_AS(cayley_to_lie(F, cp, sig), std::domain_error);
  CHECK_THROWS(CayleyParams::validated(F, EtaleScalar{Rat(1), Rat(0)},
                                       EtaleScalar{Rat(1), Rat(0)}));
  CHECK_THROWS(CayleyParams::validated(F, EtaleScalar{Rat(0), Rat(1)},
                                       EtaleScalar{Rat(2), Rat(0)}));
}

TEST_CASE("d_n factors as delta_plus times delta_minus") {
  Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    TildeGl X = TildeGl::zero(n);
    for (auto& e : X.A.e) e = rng.rat(5);
    for (auto& e : X.v) e = rng.rat(5);
    for (auto& e : X.u) e = rng.rat(5);
    QuotientData q = quotient_point(X);
    CHECK(q.d_r.back() == delta_plus(X) * delta_minus(X));
  }
}

#include "orbw/descent.hpp"

#include <doctest.h>

using namespace orbw;

namespace {

QuotientPoint qp(std::vector<Rat> cp, std::vector<Rat> m) {
  QuotientPoint a;
  a.char_coeffs = std::move(cp);
  a.moments = std::move(m);
  return a;
}

}  // namespace

TEST_CASE("stratify on the spec examples") {
  auto a = qp({Rat(2), Rat(-3)}, {Rat(2), Rat(3)});
  StratifyResult st = stratify(a);
  CHECK(st.r == 2);
  CHECK(st.a0 == a);
  CHECK(st.residual.deg() == 0);

  auto c = qp({Rat(4), Rat(-4)}, {Rat(0), Rat(0)});  // (x-2)^2, central
  StratifyResult sc = stratify(c);
  CHECK(sc.r == 0);
  CHECK(sc.a0.n() == 0);
  CHECK(sc.residual.poly() == poly_pow(Poly::x() - Poly::constant(Rat(2)), 2));

  auto m = qp({Rat(2), Rat(-3)}, {Rat(1), Rat(1)});
  StratifyResult sm = stratify(m);
  CHECK(sm.r == 1);
  CHECK(sm.a0.char_coeffs == std::vector<Rat>{Rat(-1)});
  CHECK(sm.a0.moments == std::vector<Rat>{Rat(1)});
  CHECK(sm.residual.cs == std::vector<Rat>{Rat(-2)});  // x - 2

  // Every exact (charpoly, moments) pair lies in the image of the quotient
  // map (the GIT quotient is an affine space), so stratify always succeeds
  // and the recurrence polynomial divides the characteristic polynomial.
  auto generic = qp({Rat(1), Rat(0)}, {Rat(1), Rat(3)});
  StratifyResult sg = stratify(generic);
  Poly full = generic.char_coeffs.size() == 2
                  ? Poly{{Rat(1), Rat(0), Rat(1)}}
                  : Poly::zero();
  MonicPoly q0;
  q0.cs = sg.a0.char_coeffs;
  CHECK(poly_divmod(full, q0.poly()).second.is_zero());
}

TEST_CASE("descend validates certificates") {
  auto a = qp({Rat(2), Rat(-3)}, {Rat(1), Rat(1)});
  DescentData dd = descend_auto(a);
  CHECK(dd.k() == 1);
  CHECK(dd.factors[0].P.cs == std::vector<Rat>{Rat(-2)});
  CHECK(dd.factors[0].mult == 1);

  // (x^2+1)^2 central at n = 4.
  QuotientPoint b = qp({Rat(1), Rat(0), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(0), Rat(0)});
  DescentData db = descend_auto(b);
  CHECK(db.k() == 1);
  CHECK(db.factors[0].mult == 2);
  CHECK(db.factors[0].P.cs == std::vector<Rat>{Rat(1), Rat(0)});

  // Bad certificates.
  DescentFactor wrong{MonicPoly{{Rat(-1)}}, 1};  // x - 1 is not the residual
  CHECK_THROWS_AS(descend(a, {wrong}), std::invalid_argument);
  DescentFactor reducible{MonicPoly{{Rat(-1), Rat(0)}}, 1};  // x^2 - 1 splits
  CHECK_THROWS_AS(descend(qp({Rat(0), Rat(0), Rat(-1), Rat(0)},
                             {Rat(0), Rat(0), Rat(0), Rat(0)}),
                          {reducible}),
                  std::invalid_argument);
}

TEST_CASE("worked n=2 orbit representatives") {
  auto a = qp({Rat(2), Rat(-3)}, {Rat(1), Rat(1)});
  DescentData dd = descend_auto(a);
  auto reps = orbit_representatives(a, dd);
  REQUIRE(reps.size() == 2);
  // Plus rep: ([[1,0],[1,2]], (1,0)^t, (1,0)); minus: ([[1,1],[0,2]], ...).
  CHECK(reps[0].epsilon == std::vector<int>{1});
  CHECK(reps[0].X.A == [] {
    MatQ A(2, 2);
    A.at(0, 0) = 1;
    A.at(1, 0) = 1;
    A.at(1, 1) = 2;
    return A;
  }());
  CHECK(reps[0].X.v == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(reps[0].X.u == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(reps[1].epsilon == std::vector<int>{-1});
  CHECK(reps[1].X.A == [] {
    MatQ A(2, 2);
    A.at(0, 0) = 1;
    A.at(0, 1) = 1;
    A.at(1, 1) = 2;
    return A;
  }());
  CHECK(classify_type(reps[0].X, dd) == std::vector<int>{1});
  CHECK(classify_type(reps[1].X, dd) == std::vector<int>{-1});
}

TEST_CASE("central points give exactly the two Z orbits") {
  for (int n : {1, 2, 3}) {
    std::vector<Rat> cp(static_cast<size_t>(n), Rat(0));
    // charpoly (x - 1)^n.
    Poly f = poly_pow(Poly::x() - Poly::constant(Rat(1)), n);
    for (int i = 0; i < n; ++i) cp[static_cast<size_t>(i)] = f.coeff(i);
    auto a = qp(cp, std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    DescentData dd = descend_auto(a);
    auto reps = orbit_representatives(a, dd);
    CHECK(reps.size() == 2);
    CHECK(reps[0].X == TildeGl::central_rep(n, Rat(1), +1));
    CHECK(reps[1].X == TildeGl::central_rep(n, Rat(1), -1));
  }
}

TEST_CASE("regular semisimple points give a single orbit") {
  auto a = qp({Rat(2), Rat(-3)}, {Rat(2), Rat(3)});
  DescentData dd = descend_auto(a);
  CHECK(dd.k() == 0);
  auto reps = orbit_representatives(a, dd);
  CHECK(reps.size() == 1);
}

TEST_CASE("classify_type on the spec examples and an eigenvalue collision") {
  auto a = qp({Rat(2), Rat(-3)}, {Rat(1), Rat(1)});
  DescentData dd = descend_auto(a);
  TildeGl plus = TildeGl::zero(2);
  plus.A.at(0, 0) = 1;
  plus.A.at(1, 0) = 1;
  plus.A.at(1, 1) = 2;
  plus.v = {Rat(1), Rat(0)};
  plus.u = {Rat(1), Rat(0)};
  CHECK(classify_type(plus, dd) == std::vector<int>{1});
  TildeGl minus = plus;
  minus.A = MatQ(2, 2);
  minus.A.at(0, 0) = 1;
  minus.A.at(0, 1) = 1;
  minus.A.at(1, 1) = 2;
  CHECK(classify_type(minus, dd) == std::vector<int>{-1});
  CHECK(classify_type(TildeGl::central_rep(3, Rat(5), +1),
                      descend_auto(quotient_point(TildeGl::central_rep(3, Rat(5), +1)).a)) ==
        std::vector<int>{1});

  // a_0 shares the eigenvalue 1 with the residual factor: charpoly (x-1)^2,
  // moments (1,1).
  auto shared = qp({Rat(1), Rat(-2)}, {Rat(1), Rat(1)});
  DescentData ds = descend_auto(shared);
  CHECK(ds.r == 1);
  CHECK(ds.residual.cs == std::vector<Rat>{Rat(-1)});
  auto reps = orbit_representatives(shared, ds);
  REQUIRE(reps.size() == 2);
  CHECK(classify_type(reps[0].X, ds) == reps[0].epsilon);
  CHECK(classify_type(reps[1].X, ds) == reps[1].epsilon);
}

TEST_CASE("orbit count is a power of two and types are recovered, k <= 3") {
  struct Seed {
    QuotientPoint a;
    int k;
  };
  std::vector<Seed> seeds = {
      {qp({Rat(0), Rat(-1)}, {Rat(0), Rat(0)}), 2},
      {qp({Rat(0), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(0)}), 3},
      {qp({Rat(0), Rat(2), Rat(-3)}, {Rat(1), Rat(1), Rat(1)}), 2},  // r = 1, residual x(x-2)
  };
  for (const auto& s : seeds) {
    DescentData dd = descend_auto(s.a);
    CHECK(dd.k() == s.k);
    auto reps = orbit_representatives(s.a, dd);
    CHECK(reps.size() == (1u << s.k));
    for (const auto& r : reps) CHECK(classify_type(r.X, dd) == r.epsilon);
  }
}

TEST_CASE("representatives are independent of the power-basis ordering") {
  // Factor x^2+1 with multiplicity 1 at a central point of gl_2.
  auto a = qp({Rat(1), Rat(0)}, {Rat(0), Rat(0)});
  DescentData dd = descend_auto(a);
  TildeGl X0 = realize_rs(dd.a0);
  for (int sign : {+1, -1}) {
    TildeGl r1 = assemble_rep(dd, X0, {sign});
    TildeGl r2 = assemble_rep_alt(dd, X0, {sign});
    CHECK(quotient_point(r1).a == quotient_point(r2).a);
    CHECK(classify_type(r1, dd) == classify_type(r2, dd));
    CHECK(is_regular(r2));
  }
  // And of the choice of X0 itself (conjugated realization).
  auto b = qp({Rat(2), Rat(-3)}, {Rat(1), Rat(1)});
  DescentData db = descend_auto(b);
  TildeGl Y0 = realize_rs(db.a0);
  MatQ g(1, 1);
  g.at(0, 0) = Rat(1);  // GL_1 over the r = 1 slice: scaling
  TildeGl Y0b = act(Y0, g);
  for (int sign : {+1, -1}) {
    TildeGl r1 = assemble_rep(db, Y0, {sign});
    TildeGl r2 = assemble_rep(db, Y0b, {sign});
    CHECK(quotient_point(r1).a == quotient_point(r2).a);
    CHECK(classify_type(r1, db) == classify_type(r2, db));
  }
}

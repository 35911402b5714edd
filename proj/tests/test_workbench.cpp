#include "orbw/workbench.hpp"

#include <doctest.h>

using namespace orbw;

namespace {

WorkbenchConfig cfg3() {
  return WorkbenchConfig::from_json(Json{{"base", Json{{"p", 3}, {"etale", "inert"}}}});
}

}  // namespace

TEST_CASE("JSON round trips") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    TildeGl X = TildeGl::zero(2);
    for (auto& e : X.A.e) e = rng.rat(9);
    for (auto& e : X.v) e = rng.rat(9);
    for (auto& e : X.u) e = rng.rat(9);
    CHECK(tilde_from_json(tilde_json(X)) == X);
  }
  QuotientPoint a;
  a.char_coeffs = {Rat(2), Rat(-3)};
  a.moments = {Rat(1), Rat(1) / Rat(2)};
  a.d = Rat(7);
  CHECK(qpoint_from_json(qpoint_json(a)) == a);
  LaurentRational R = LaurentRational::make(
      LaurentPoly::term(-2, Rat(3)) + LaurentPoly::term(1, Rat(1)),
      LaurentPoly::constant(Rat(2)) + LaurentPoly::term(3, Rat(4)));
  CHECK(laurent_from_json(laurent_json(R)) == R);
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  LatticeCosetFunction f = LatticeCosetFunction::indicator(amb, {Rat(1), Rat(0), Rat(2)}, 2);
  Json j = lcf_json(f);
  LatticeCosetFunction g = lcf_from_json(j);
  CHECK(lcf_json(g) == j);
  CHECK(etale_from_json(F, etale_json(F, EtaleScalar{Rat(1), Rat(-2)})) ==
        EtaleScalar{Rat(1), Rat(-2)});
}

TEST_CASE("verb outputs are deterministic") {
  WorkbenchConfig cfg = cfg3();
  Json payload;
  payload["a"] = Json{{"charpoly", Json::array({"2", "-3"})},
                      {"moments", Json::array({"1", "1"})}};
  Json r1 = run_verb("orbits", cfg, payload);
  Json r2 = run_verb("orbits", cfg, payload);
  CHECK(r1.dump() == r2.dump());
  CHECK(r1.at("reps").size() == 2);
  CHECK(r1.at("reps").at(0).at("epsilon") == "+");
}

TEST_CASE("lfactor verb emits the documented canonical form") {
  WorkbenchConfig cfg = cfg3();
  Json payload{{"n", 1}, {"sign", "+"}};
  Json r = run_verb("lfactor", cfg, payload);
  // t/(t+1): num [[1,"1"]], den [[1,"1"],[0,"1"]].
  CHECK(r.at("num").dump() == "[[1,\"1\"]]");
  CHECK(r.at("den").dump() == "[[1,\"1\"],[0,\"1\"]]");
}

TEST_CASE("invariants verb on the worked n=2 element") {
  WorkbenchConfig cfg = cfg3();
  Json payload;
  payload["element"] = Json{{"n", 2},
                            {"A", Json::array({Json::array({"1", "0"}), Json::array({"1", "2"})})},
                            {"v", Json::array({"1", "0"})},
                            {"u", Json::array({"1", "0"})}};
  Json r = run_verb("invariants", cfg, payload);
  CHECK(r.at("delta_plus") == "1");
  CHECK(r.at("r") == 1);
  CHECK(r.at("regular") == true);
  CHECK(r.at("quotient").at("moments").at(0) == "1");
}

TEST_CASE("integrate verb routes agree") {
  WorkbenchConfig cfg = cfg3();
  Json payload;
  payload["X"] = Json{{"central", Json{{"n", 1}, {"sign", "+"}, {"lambda", "0"}}}};
  payload["phi"] = lcf_json(
      LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, 1, Rat(1)}));
  Json tate = run_verb("integrate", cfg, payload);
  payload["route"] = "gamma";
  Json gamma = run_verb("integrate", cfg, payload);
  payload["route"] = "oracle";
  Json oracle = run_verb("integrate", cfg, payload);
  CHECK(tate.dump() == gamma.dump());
  CHECK(tate.dump() == oracle.dump());
}

TEST_CASE("transfer-check verb verdict") {
  WorkbenchConfig cfg = cfg3();
  Json payload{{"depth", 1}};
  Json r = run_verb("transfer-check", cfg, payload);
  CHECK(r.at("verdict") == "pass");
  CHECK(r.at("matched") == true);
}

TEST_CASE("schema violations raise structured errors") {
  WorkbenchConfig cfg = cfg3();
  CHECK_THROWS(run_verb("no-such-verb", cfg, Json::object()));
  CHECK_THROWS(run_verb("stratify", cfg, Json{{"a", Json{{"charpoly", Json::array({"1"})},
                                                          {"moments", Json::array()}}}}));
  CHECK_THROWS(WorkbenchConfig::from_json(Json{{"base", Json{{"p", 2}, {"etale", "inert"}}}}));
  CHECK_THROWS(WorkbenchConfig::from_json(
      Json{{"base", Json{{"p", 3}, {"etale", "inert"}}}, {"characters", Json{{"mu", "1"}}}}));
}

TEST_CASE("verification reports carry digests and stable bytes") {
  auto checks = run_acceptance("orbits", 1);
  Json r1 = verification_report("orbits", checks);
  CHECK(r1.at("verdict") == "pass");
  auto checks2 = run_acceptance("orbits", 1);
  // Timing fields differ run to run; the digest covers the whole payload, so
  // compare the stable fields.
  CHECK(checks.size() == checks2.size());
  for (size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].id == checks2[i].id);
    CHECK(checks[i].pass == checks2[i].pass);
    CHECK(checks[i].detail == checks2[i].detail);
  }
}

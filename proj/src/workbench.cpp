#include "orbw/workbench.hpp"

#include <chrono>
#include <fstream>

namespace orbw {

WorkbenchConfig default_config_for(const BaseField& F) {
  WorkbenchConfig cfg;
  cfg.base = F;
  if (F.inert()) {
    cfg.tau = EtaleScalar{Rat(0), Rat(1)};   // sqrt(d)
    cfg.sigma = EtaleScalar{Rat(-1), Rat(0)};
    cfg.mu_at_p = -1;
  } else {
    cfg.tau = EtaleScalar{Rat(1), Rat(-1)};
    cfg.sigma = EtaleScalar{Rat(1), Rat(1)};
    cfg.mu_at_p = 1;
  }
  return cfg;
}

WorkbenchConfig WorkbenchConfig::from_json(const Json& j) {
  BaseField F = field_from_json(j.at("base"));
  WorkbenchConfig cfg = default_config_for(F);
  if (j.contains("characters")) {
    const Json& ch = j.at("characters");
    if (ch.contains("xi")) cfg.xi.at_p = rat_from_json(ch.at("xi"));
    if (ch.contains("mu")) cfg.mu_at_p = rat_from_json(ch.at("mu"));
  }
  if (j.contains("cayley")) {
    cfg.tau = etale_from_json(F, j.at("cayley").at("tau"));
    cfg.sigma = etale_from_json(F, j.at("cayley").at("sigma"));
  }
  if (j.contains("oracle")) {
    if (j.at("oracle").contains("window")) cfg.oracle_window = j.at("oracle").at("window").get<int>();
    if (j.at("oracle").contains("depth")) cfg.oracle_depth = j.at("oracle").at("depth").get<int>();
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  // Validate the unramified constraints eagerly.
  cfg.cayley();
  cfg.mu();
  if (cfg.xi.at_p == 0) throw std::invalid_argument("xi must be nonzero");
  return cfg;
}

Json WorkbenchConfig::to_json() const {
  Json j;
  j["base"] = field_json(base);
  j["characters"] = Json{{"xi", rat_json(xi.at_p)}, {"mu", rat_json(mu_at_p)}};
  j["cayley"] = Json{{"tau", etale_json(base, tau)}, {"sigma", etale_json(base, sigma)}};
  j["oracle"] = Json{{"window", oracle_window}, {"depth", oracle_depth}};
  j["seed"] = seed;
  return j;
}

CayleyParams WorkbenchConfig::cayley() const {
  return CayleyParams::validated(base, tau, sigma);
}

std::uint64_t fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

TildeGl element_from_payload(const Json& j) { return tilde_from_json(j); }

std::vector<DescentFactor> factors_from_json(const Json& j) {
  std::vector<DescentFactor> out;
  for (const auto& fj : j) {
    DescentFactor f;
    f.P = monic_from_json(fj.at("P"));
    f.mult = fj.contains("mult") ? fj.at("mult").get<int>() : 1;
    out.push_back(f);
  }
  return out;
}

DescentData descent_from_payload(const WorkbenchConfig& cfg, const Json& payload) {
  (void)cfg;
  QuotientPoint a = qpoint_from_json(payload.at("a"));
  if (payload.contains("factors")) return descend(a, factors_from_json(payload.at("factors")));
  return descend_auto(a);
}

std::string eps_string(const std::vector<int>& eps) {
  std::string s;
  for (int e : eps) s += (e > 0 ? '+' : '-');
  return s;
}

std::vector<int> eps_from_string(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '+')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else
      throw std::invalid_argument("epsilon string must consist of + and -");
  }
  return out;
}

}  // namespace

Json run_verb(const std::string& verb, const WorkbenchConfig& cfg, const Json& payload) {
  const BaseField& F = cfg.base;
  Json out;
  if (verb == "invariants") {
    if (payload.contains("element") && payload.at("element").contains("entries")) {
      SElement x = s_elem_from_json(F, payload.at("element"));
      SInvariants inv = s_invariants(F, x);
      Json cc = Json::array(), mm = Json::array();
      for (const auto& c : inv.char_coeffs) cc.push_back(etale_json(F, c));
      for (const auto& m : inv.moments) mm.push_back(etale_json(F, m));
      out["charpoly"] = cc;
      out["moments"] = mm;
      out["Delta_plus"] = etale_json(F, Delta_plus(F, x));
      out["Delta_minus"] = etale_json(F, Delta_minus(F, x));
      return out;
    }
    const Json& ej = payload.at("element");
    if (ej.contains("d")) {
      GlNext Y = glnext_from_json(ej);
      QuotientData q = quotient_point(Y);
      out["delta_plus"] = rat_json(delta_plus(Y));
      out["delta_minus"] = rat_json(delta_minus(Y));
      out["quotient"] = qpoint_json(q.a);
      Json dr = Json::array();
      for (const auto& d : q.d_r) dr.push_back(rat_json(d));
      out["d_r"] = dr;
      out["r"] = q.r;
      out["regular"] = is_regular(Y.X);
      return out;
    }
    TildeGl X = element_from_payload(ej);
    QuotientData q = quotient_point(X);
    out["delta_plus"] = rat_json(delta_plus(X));
    out["delta_minus"] = rat_json(delta_minus(X));
    out["quotient"] = qpoint_json(q.a);
    Json dr = Json::array();
    for (const auto& d : q.d_r) dr.push_back(rat_json(d));
    out["d_r"] = dr;
    out["r"] = q.r;
    out["regular"] = is_regular(X);
    return out;
  }
  if (verb == "quotient") {
    TildeGl X = element_from_payload(payload.at("element"));
    return qpoint_json(quotient_point(X).a);
  }
  if (verb == "stratify") {
    StratifyResult st = stratify(qpoint_from_json(payload.at("a")));
    out["r"] = st.r;
    out["a0"] = qpoint_json(st.a0);
    out["residual"] = monic_json(st.residual)["coeffs"];
    return out;
  }
  if (verb == "descend") {
    DescentData dd = descent_from_payload(cfg, payload);
    return descent_json(dd);
  }
  if (verb == "orbits") {
    QuotientPoint a = qpoint_from_json(payload.at("a"));
    DescentData dd = descent_from_payload(cfg, payload);
    auto reps = orbit_representatives(a, dd);
    out = descent_json(dd);
    Json rj = Json::array();
    for (const auto& r : reps) {
      Json e;
      e["epsilon"] = eps_string(r.epsilon);
      e["X"] = tilde_json(r.X);
      e["slice"] = r.slice_desc;
      rj.push_back(e);
    }
    out["reps"] = rj;
    return out;
  }
  if (verb == "classify") {
    TildeGl X = element_from_payload(payload.at("X"));
    QuotientData q = quotient_point(X);
    Json pl = payload;
    if (!pl.contains("a")) pl["a"] = qpoint_json(q.a);
    DescentData dd = descent_from_payload(cfg, pl);
    out["epsilon"] = eps_string(classify_type(X, dd));
    return out;
  }
  if (verb == "cayley") {
    std::string dir = payload.at("direction").get<std::string>();
    CayleyParams cp = cfg.cayley();
    if (dir == "to_group") {
      GlNext Y = glnext_from_json(payload.at("element"));
      return s_elem_json(F, cayley_to_group(F, cp, Y));
    }
    if (dir == "to_lie") {
      SElement x = s_elem_from_json(F, payload.at("element"));
      return glnext_json(cayley_to_lie(F, cp, x));
    }
    throw std::invalid_argument("direction must be to_group or to_lie");
  }
  if (verb == "lfactor") {
    if (payload.contains("a")) {
      DescentData dd = descent_from_payload(cfg, payload);
      auto eps = eps_from_string(payload.at("epsilon").get<std::string>());
      return laurent_json(L_for_orbit(F, cfg.xi, dd, eps));
    }
    int n = payload.at("n").get<int>();
    int sign = payload.at("sign").get<std::string>() == "+" ? 1 : -1;
    return laurent_json(L_central(F, cfg.xi, n, sign));
  }
  if (verb == "integrate") {
    std::string route = payload.contains("route") ? payload.at("route").get<std::string>() : "tate";
    LatticeCosetFunction phi = lcf_from_json(payload.at("phi"));
    if (payload.at("X").contains("central")) {
      const Json& cj = payload.at("X").at("central");
      CentralElement Z;
      Z.n = cj.at("n").get<int>();
      Z.sign = cj.at("sign").get<std::string>() == "+" ? 1 : -1;
      Z.lambda = rat_from_json(cj.at("lambda"));
      if (route == "tate") return laurent_json(orbital_central(F, Z, phi, cfg.xi));
      if (route == "gamma") return laurent_json(orbital_via_gamma(F, Z, phi, cfg.xi));
      if (route == "oracle") {
        OracleOptions opt{cfg.oracle_window, cfg.oracle_depth};
        return laurent_json(oracle_integrate(F, Z.element(), phi, cfg.xi, opt));
      }
      throw std::invalid_argument("route must be tate, gamma or oracle for central elements");
    }
    TildeGl X = element_from_payload(payload.at("X"));
    if (route == "oracle") {
      OracleOptions opt{cfg.oracle_window, cfg.oracle_depth};
      return laurent_json(oracle_integrate(F, X, phi, cfg.xi, opt));
    }
    if (route == "descent") {
      QuotientData q = quotient_point(X);
      DescentData dd = descend_auto(q.a);
      auto eps = classify_type(X, dd);
      auto reps = orbit_representatives(q.a, dd);
      for (const auto& r : reps)
        if (r.epsilon == eps) {
          SliceFunction sf;
          GeneralOrbitalResult res = orbital_general(F, r, dd, sf, cfg.xi);
          out["I"] = laurent_json(res.I);
          out["L"] = laurent_json(res.L);
          out["I_normalized"] = laurent_json(res.I_normalized);
          return out;
        }
      throw std::logic_error("no representative matched the classified type");
    }
    return laurent_json(orbital_rs(F, X, phi, cfg.xi));
  }
  if (verb == "integrate-oracle") {
    TildeGl X = payload.at("X").contains("central")
                    ? [&] {
                        const Json& cj = payload.at("X").at("central");
                        CentralElement Z;
                        Z.n = cj.at("n").get<int>();
                        Z.sign = cj.at("sign").get<std::string>() == "+" ? 1 : -1;
                        Z.lambda = rat_from_json(cj.at("lambda"));
                        return Z.element();
                      }()
                    : element_from_payload(payload.at("X"));
    LatticeCosetFunction phi = lcf_from_json(payload.at("phi"));
    OracleOptions opt{cfg.oracle_window, cfg.oracle_depth};
    if (payload.contains("window")) opt.window = payload.at("window").get<int>();
    return laurent_json(oracle_integrate(F, X, phi, cfg.xi, opt));
  }
  if (verb == "fourier") {
    LatticeCosetFunction phi = lcf_from_json(payload.at("phi"));
    return lcf_json(fourier(F, phi));
  }
  if (verb == "match") {
    TildeGl X = element_from_payload(payload.at("X"));
    out["disc"] = matching_disc_is_norm(F, X) ? "norm" : "nonnorm";
    return out;
  }
  if (verb == "orbits-unitary") {
    QuotientPoint a = qpoint_from_json(payload.at("a"));
    DescentData dd = descent_from_payload(cfg, payload);
    SemisimpleOrbits so = semisimple_orbits(F, a, dd);
    Json oj = Json::array();
    for (const auto& t : so.orbits) {
      Json tj;
      tj["h0"] = t.h0_norm ? "norm" : "nonnorm";
      Json fb = Json::array();
      for (bool b : t.factor_norm) fb.push_back(b ? "norm" : "nonnorm");
      tj["factors"] = fb;
      tj["assembled"] = t.assembled_norm ? "norm" : "nonnorm";
      oj.push_back(tj);
    }
    out["orbits"] = oj;
    out["count"] = static_cast<int>(so.orbits.size());
    out["per_V"] = Json{{"norm", so.count_norm_V}, {"nonnorm", so.count_other_V}};
    return out;
  }
  if (verb == "constants") {
    QuotientPoint a = qpoint_from_json(payload.at("a"));
    DescentData dd = descent_from_payload(cfg, payload);
    auto eps = eps_from_string(payload.at("epsilon").get<std::string>());
    SemisimpleOrbits so = semisimple_orbits(F, a, dd);
    TransferConstants tc = transfer_constants(F, dd, eps, so);
    out["c_plus"] = rat_json(tc.c_plus);
    out["c_minus"] = rat_json(tc.c_minus);
    out["c_iota"] = rat_json(tc.c_iota);
    out["c_X"] = rat_json(tc.c_X);
    Json co = Json::array();
    for (const auto& c : tc.c_orbit) co.push_back(rat_json(c));
    out["c_orbit"] = co;
    return out;
  }
  if (verb == "transfer-check") {
    int depth = payload.contains("depth") ? payload.at("depth").get<int>() : 2;
    LatticeCosetFunction phi =
        payload.contains("phi")
            ? lcf_from_json(payload.at("phi"))
            : LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, 1, Rat(1)});
    std::vector<LatticeCosetFunction> phiV;
    auto classes = hermitian_classes(F, 1);
    if (payload.contains("phiV")) {
      for (const auto& fj : payload.at("phiV")) phiV.push_back(lcf_from_json(fj));
    } else {
      phiV.push_back(
          LatticeCosetFunction::std_lattice(Ambient{SpaceKind::u_tilde, 1, classes[0].gram_last}));
      if (classes.size() > 1)
        phiV.push_back(
            LatticeCosetFunction::zero(Ambient{SpaceKind::u_tilde, 1, classes[1].gram_last}));
    }
    TransferCheckReport rep = singular_transfer_check(F, phi, phiV, depth);
    out["matched"] = rep.matched;
    out["verdict"] = rep.all_pass() ? "pass" : "fail";
    Json entries = Json::array();
    for (const auto& e : rep.entries)
      entries.push_back(Json{{"check", e.label}, {"pass", e.pass}, {"detail", e.detail}});
    out["ledger"] = entries;
    return out;
  }
  if (verb == "verify") {
    std::string sel = payload.contains("suite") ? payload.at("suite").get<std::string>() : "all";
    auto checks = run_acceptance(sel, cfg.seed);
    return verification_report(sel, checks);
  }
  throw std::invalid_argument("unknown verb: " + verb);
}

// ---------------------------------------------------------------------------
// Acceptance criteria.

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  double secs() const {
    return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0).count();
  }
};

void add(std::vector<CheckResult>& out, const std::string& id, bool pass, const std::string& detail,
         double secs) {
  out.push_back({id, pass, detail, secs});
}

LatticeCosetFunction seeded_lcf(const BaseField& F, int n, Rng& rng, int max_terms, int max_depth_t) {
  Ambient amb{SpaceKind::tilde_gl, n, Rat(1)};
  // Seeds always contain the unit of the standard lattice, so every route
  // comparison sees a nonzero integral.
  LatticeCosetFunction f = LatticeCosetFunction::std_lattice(amb);
  int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    CosetTerm ct;
    ct.weight = Rat(rng.uniform(-3, 3));
    if (ct.weight == 0) ct.weight = 1;
    int depth = static_cast<int>(rng.uniform(0, max_depth_t));
    for (int i = 0; i < amb.dim(); ++i) {
      long c = rng.uniform(-2, 2);
      // Occasional p^{-1} center to exercise non-integral supports at n = 1.
      Rat center = Rat(c);
      if (n == 1 && rng.uniform(0, 7) == 0) center = Rat(c) / Rat(F.p);
      ct.center.push_back(center);
      ct.depths.push_back(depth);
    }
    f.terms.push_back(ct);
  }
  canonicalize(F, f);
  if (f.terms.empty()) f = LatticeCosetFunction::std_lattice(amb);
  return f;
}

std::vector<CheckResult> criterion1() {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  for (long p : {3L, 5L})
    for (EtaleType et : {EtaleType::inert, EtaleType::split})
      for (int n : {1, 2})
        for (int lam_sel : {0, 1, 2})
          for (int sign : {+1, -1}) {
            BaseField F = BaseField::make(Int(p), et);
            Rat lambda = lam_sel == 2 ? Rat(F.p) : Rat(lam_sel);
            UnramifiedCharacter xi{Rat(1)};
            CentralElement Z{n, sign, lambda, std::nullopt};
            LatticeCosetFunction phi =
                LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, n, Rat(1)});
            LaurentRational I = orbital_central(F, Z, phi, xi);
            LaurentRational L = L_central(F, xi, n, sign);
            if (!(I == L)) {
              pass = false;
              detail = "mismatch at p=" + std::to_string(p) + " n=" + std::to_string(n) +
                       " lambda=" + rat_to_string(lambda) + " sign=" + std::to_string(sign) +
                       (et == EtaleType::inert ? " inert" : " split");
            }
          }
  add(out, "1 unramified central orbital integrals equal the L-factors", pass, detail, tm.secs());
  return out;
}

std::vector<CheckResult> criterion2() {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  struct Seed {
    int n;
    QuotientPoint a;
  };
  std::vector<Seed> seeds;
  auto qp1 = [](long a, long m) {
    QuotientPoint q;
    q.char_coeffs = {Rat(-a)};
    q.moments = {Rat(m)};
    return q;
  };
  auto qp2 = [](long c0, long c1, long m0, long m1) {
    QuotientPoint q;
    q.char_coeffs = {Rat(c0), Rat(c1)};
    q.moments = {Rat(m0), Rat(m1)};
    return q;
  };
  seeds.push_back({1, qp1(0, 1)});
  seeds.push_back({1, qp1(1, 1)});
  seeds.push_back({1, qp1(2, -1)});
  seeds.push_back({1, qp1(-1, 1)});
  seeds.push_back({1, qp1(4, -1)});
  seeds.push_back({1, qp1(7, 1)});
  seeds.push_back({2, qp2(2, -3, 2, 3)});   // Hankel det 1
  seeds.push_back({2, qp2(-1, 0, 1, 1)});   // x^2 - 1; moments 1,1 -> d_2 = m2 - 1 ... checked below
  seeds.push_back({2, qp2(1, -3, 1, 2)});
  seeds.push_back({2, qp2(-2, -1, 0, 1)});
  int used = 0;
  for (long p : {3L, 5L}) {
    BaseField F = BaseField::make(Int(p), EtaleType::inert);
    UnramifiedCharacter xi{Rat(1)};
    for (const auto& s : seeds) {
      std::vector<Rat> ext = extend_moments(s.a, 2 * s.n);
      Rat dn = hankel_det(ext, s.n);
      if (dn == 0 || F.val(dn) != 0) continue;  // keep only unit-d_n seeds
      TildeGl X = realize_rs(s.a);
      LatticeCosetFunction phi =
          LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, s.n, Rat(1)});
      LaurentRational I = orbital_rs(F, X, phi, xi);
      ++used;
      if (!(I == LaurentRational::constant(Rat(1)))) {
        pass = false;
        detail = "I != 1 at p=" + std::to_string(p) + " n=" + std::to_string(s.n);
      }
    }
  }
  if (used < 10) {
    pass = false;
    detail = "only " + std::to_string(used) + " unit-d_n seeds";
  }
  add(out, "2 unramified rs integrals equal 1 (" + std::to_string(used) + " instances)", pass,
      detail, tm.secs());
  return out;
}

std::vector<CheckResult> criterion3(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  Rng rng(seed * 77 + 5);
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  OracleOptions opt{6, 9};
  for (int i = 0; i < 10 && pass; ++i) {
    LatticeCosetFunction phi = seeded_lcf(F, 1, rng, 3, 2);
    int sign = (i % 2 == 0) ? +1 : -1;
    Rat lambda = Rat(i % 3);
    CentralElement Z{1, sign, lambda, std::nullopt};
    LaurentRational a = orbital_central(F, Z, phi, xi);
    LaurentRational b = orbital_via_gamma(F, Z, phi, xi);
    LaurentRational c = oracle_integrate(F, Z.element(), phi, xi, opt);
    if (!(a == b) || !(a == c)) {
      pass = false;
      detail = "n=1 route mismatch at seed index " + std::to_string(i);
    }
  }
  OracleOptions opt2{12, 9};
  for (int i = 0; i < 3 && pass; ++i) {
    LatticeCosetFunction phi = seeded_lcf(F, 2, rng, 2, 1);
    int sign = (i % 2 == 0) ? +1 : -1;
    CentralElement Z{2, sign, Rat(i % 2), std::nullopt};
    LaurentRational a = orbital_central(F, Z, phi, xi);
    LaurentRational b = orbital_via_gamma(F, Z, phi, xi);
    LaurentRational c = oracle_integrate(F, Z.element(), phi, xi, opt2);
    if (!(a == b) || !(a == c)) {
      pass = false;
      detail = "n=2 route mismatch at seed index " + std::to_string(i);
    }
  }
  add(out, "3 route triangle tate = gamma = oracle (10 at n=1, 3 at n=2)", pass, detail, tm.secs());
  return out;
}

std::vector<CheckResult> criterion4() {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  struct Seed {
    const char* name;
    QuotientPoint a;
    int k;
  };
  std::vector<Seed> seeds;
  {
    QuotientPoint a;  // k = 0, rs
    a.char_coeffs = {Rat(2), Rat(-3)};
    a.moments = {Rat(2), Rat(3)};
    seeds.push_back({"rs n=2", a, 0});
  }
  {
    QuotientPoint a;  // k = 1, central (x-1)^2
    a.char_coeffs = {Rat(1), Rat(-2)};
    a.moments = {Rat(0), Rat(0)};
    seeds.push_back({"central (x-1)^2", a, 1});
  }
  {
    QuotientPoint a;  // k = 1, r = 1: the worked mixed point
    a.char_coeffs = {Rat(2), Rat(-3)};
    a.moments = {Rat(1), Rat(1)};
    seeds.push_back({"mixed x^2-3x+2 (1,1)", a, 1});
  }
  {
    QuotientPoint a;  // k = 1, irreducible quadratic
    a.char_coeffs = {Rat(1), Rat(0)};
    a.moments = {Rat(0), Rat(0)};
    seeds.push_back({"central x^2+1", a, 1});
  }
  {
    QuotientPoint a;  // k = 2
    a.char_coeffs = {Rat(0), Rat(-1)};
    a.moments = {Rat(0), Rat(0)};
    seeds.push_back({"x(x-1) nilpotent-split", a, 2});
  }
  {
    QuotientPoint a;  // k = 3 at n = 3
    a.char_coeffs = {Rat(0), Rat(-1), Rat(0)};
    a.moments = {Rat(0), Rat(0), Rat(0)};
    seeds.push_back({"x(x-1)(x+1)", a, 3});
  }
  for (const auto& s : seeds) {
    DescentData dd = descend_auto(s.a);
    if (dd.k() != s.k) {
      pass = false;
      detail = std::string(s.name) + ": expected k=" + std::to_string(s.k);
      break;
    }
    auto reps = orbit_representatives(s.a, dd);
    if (static_cast<int>(reps.size()) != (1 << s.k)) {
      pass = false;
      detail = std::string(s.name) + ": rep count " + std::to_string(reps.size());
      break;
    }
    int plus_count = 0, minus_count = 0;
    for (const auto& r : reps) {
      QuotientData q = quotient_point(r.X);
      if (!(q.a == s.a) || !is_regular(r.X)) {
        pass = false;
        detail = std::string(s.name) + ": representative fails quotient/regularity";
      }
      bool dplus = delta_plus(r.X) != 0, dminus = delta_minus(r.X) != 0;
      bool all_plus = true, all_minus = true;
      for (int e : r.epsilon) {
        all_plus = all_plus && e > 0;
        all_minus = all_minus && e < 0;
      }
      if (dplus) {
        ++plus_count;
        if (!all_plus) {
          pass = false;
          detail = std::string(s.name) + ": delta+ rep is not the all-plus type";
        }
      }
      if (dminus) {
        ++minus_count;
        if (!all_minus) {
          pass = false;
          detail = std::string(s.name) + ": delta- rep is not the all-minus type";
        }
      }
      auto eps = classify_type(r.X, dd);
      if (eps != r.epsilon) {
        pass = false;
        detail = std::string(s.name) + ": classify_type does not invert (got " + eps_string(eps) +
                 " want " + eps_string(r.epsilon) + ")";
      }
    }
    if (plus_count != 1 || minus_count != 1) {
      pass = false;
      detail = std::string(s.name) + ": X_+/X_- uniqueness violated";
    }
    if (!pass) break;
  }
  add(out, "4 orbit classification (2^k reps, X_+/X_- uniqueness, classify inverts)", pass, detail,
      tm.secs());
  return out;
}

std::vector<CheckResult> criterion5(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  Rng rng(seed * 131 + 7);
  for (EtaleType et : {EtaleType::inert, EtaleType::split}) {
    BaseField F = BaseField::make(Int(5), et);
    WorkbenchConfig cfg = default_config_for(F);
    CayleyParams cp = cfg.cayley();
    for (int n : {1, 2}) {
      for (int trial = 0; trial < 10; ++trial) {
        // Random integral chart point of gl_{n+1}.
        int m = n + 1;
        MatQ M(m, m);
        for (auto& e : M.e) e = Rat(rng.uniform(-4, 4));
        GlNext Y = GlNext::from_matrix(M);
        SElement x;
        try {
          x = cayley_to_group(F, cp, Y);
        } catch (const std::domain_error&) {
          --trial;  // outside the chart; resample
          continue;
        }
        GlNext back = cayley_to_lie(F, cp, x);
        if (!(back == Y)) {
          pass = false;
          detail = "round trip failed";
        }
        // Determinant identities.
        EtaleScalar Dp = Delta_plus(F, x), Dm = Delta_minus(F, x);
        MatE ym = MatE::from_ratmat(F, Y.full());
        MatE one_minus =
            et_sub(F, MatE::identity(F, m), et_scale(F, et_inv(F, cp.tau), ym));
        EtaleScalar detm = et_det(F, one_minus);
        EtaleScalar factor = et_mul(F, EtaleScalar::from_base(F, Rat(-2)),
                                    et_mul(F, cp.sigma, et_inv(F, cp.tau)));
        EtaleScalar pref = EtaleScalar::one(F);
        for (int i = 0; i < n * (n + 1) / 2; ++i) pref = et_mul(F, pref, factor);
        EtaleScalar detpow = EtaleScalar::one(F);
        for (int i = 0; i < n; ++i) detpow = et_mul(F, detpow, detm);
        EtaleScalar rhs_p = et_mul(F, pref, et_mul(F, et_inv(F, detpow),
                                                   EtaleScalar::from_base(F, delta_plus(Y))));
        EtaleScalar rhs_m = et_mul(F, pref, et_mul(F, et_inv(F, detpow),
                                                   EtaleScalar::from_base(F, delta_minus(Y))));
        if (!(Dp == rhs_p) || !(Dm == rhs_m)) {
          pass = false;
          detail = "Cayley determinant identity failed at n=" + std::to_string(n) +
                   (et == EtaleType::inert ? " inert" : " split");
        }
        if (!pass) break;
      }
      if (!pass) break;
    }
    if (!pass) break;
  }
  add(out, "5 Cayley determinant identities and round trips (20 points, n in {1,2})", pass, detail,
      tm.secs());
  return out;
}

std::vector<CheckResult> criterion6(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  Rng rng(seed * 17 + 3);
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  Ambient amb{SpaceKind::tilde_gl, 1, Rat(1)};
  for (int i = 0; i < 5 && pass; ++i) {
    LatticeCosetFunction base = seeded_lcf(F, 1, rng, 2, 2);
    LatticeCosetFunction unstable;
    if (i < 3) {
      // phi - R(u) phi for a unit u.
      MatQ g(1, 1);
      g.at(0, 0) = Rat(1 + static_cast<long>(i));
      if (F.val(g.at(0, 0)) != 0) g.at(0, 0) = Rat(1);
      unstable = lcf_add(F, base, lcf_scale(Rat(-1), act_unit(F, base, g)));
    } else {
      // phi minus its average over the units mod p^2.
      LatticeCosetFunction avg = LatticeCosetFunction::zero(amb);
      long mod = 9, count = 0;
      for (long u = 1; u < mod; ++u) {
        if (u % 3 == 0) continue;
        MatQ g(1, 1);
        g.at(0, 0) = Rat(u);
        avg = lcf_add(F, avg, act_unit(F, base, g));
        ++count;
      }
      avg = lcf_scale(Rat(1) / Rat(count), avg);
      unstable = lcf_add(F, base, lcf_scale(Rat(-1), avg));
    }
    for (int sign : {+1, -1}) {
      CentralElement Z{1, sign, Rat(0), std::nullopt};
      LaurentRational I = orbital_central(F, Z, unstable, xi);
      if (!I.is_zero()) {
        pass = false;
        detail = "nonzero integral of an unstable function (seed " + std::to_string(i) + ")";
      }
    }
  }
  add(out, "6 stability: unstable functions integrate to 0 at Z_0^{+-}", pass, detail, tm.secs());
  return out;
}

std::vector<CheckResult> criterion7() {
  std::vector<CheckResult> out;
  Timer tm;
  bool all = true;
  std::string detail;
  for (long p : {3L, 5L}) {
    int depth = p == 3 ? 3 : 2;
    BaseField F = BaseField::make(Int(p), EtaleType::inert);
    auto classes = hermitian_classes(F, 1);
    LatticeCosetFunction phi =
        LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, 1, Rat(1)});
    std::vector<LatticeCosetFunction> phiV;
    phiV.push_back(
        LatticeCosetFunction::std_lattice(Ambient{SpaceKind::u_tilde, 1, classes[0].gram_last}));
    phiV.push_back(
        LatticeCosetFunction::zero(Ambient{SpaceKind::u_tilde, 1, classes[1].gram_last}));
    TransferCheckReport rep = singular_transfer_check(F, phi, phiV, depth);
    if (!rep.matched || !rep.all_pass()) {
      all = false;
      for (const auto& e : rep.entries)
        if (!e.pass) detail = "p=" + std::to_string(p) + ": " + e.label + " -- " + e.detail;
    }
  }
  add(out, "7 n=1 singular transfer: matched pair, Prop-identity, flip, Fourier consistency", all,
      detail, tm.secs());
  return out;
}

std::vector<CheckResult> criterion8() {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  for (long p : {3L, 5L}) {
    BaseField F = BaseField::make(Int(p), EtaleType::inert);
    WorkbenchConfig cfg = default_config_for(F);
    CayleyParams cp = cfg.cayley();
    GroupTestFunction f = GroupTestFunction::unit(F);
    // Scan small integral gamma until the unramified hypotheses hold.
    bool found = false;
    for (long a = 0; a <= 2 && !found; ++a)
      for (long b = 0; b <= 2 && !found; ++b) {
        GroupElement gamma;
        gamma.g1 = EtaleScalar::one(F);
        MatE g2 = MatE::identity(F, 2);
        g2.at(0, 1) = EtaleScalar{Rat(a), Rat(b)};
        g2.at(1, 0) = EtaleScalar{Rat(b), Rat(0)};
        gamma.g2 = g2;
        try {
          GroupPullbackResult res = group_pullback(F, f, gamma, cp, cfg.xi, cfg.mu());
          found = true;
          if (!(res.I_gamma == res.L_gamma)) {
            pass = false;
            detail = "I != L at p=" + std::to_string(p) + " a=" + std::to_string(a) +
                     " b=" + std::to_string(b);
          }
          if (res.I_direct && !(*res.I_direct == res.I_gamma)) {
            pass = false;
            detail = "direct rs route disagrees at p=" + std::to_string(p);
          }
        } catch (const std::exception&) {
          continue;  // outside the chart or not regular; try the next gamma
        }
      }
    if (!found) {
      pass = false;
      detail = "no usable gamma found at p=" + std::to_string(p);
    }
  }
  add(out, "8 group-side n=1: I^sigma_gamma(1_{G'(O)}) = L_gamma", pass, detail, tm.secs());
  return out;
}

std::vector<CheckResult> criterion9() {
  std::vector<CheckResult> out;
  Timer tm;
  bool pass = true;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 5 && pass; ++seed) {
    Rng rng(seed);
    BaseField F = BaseField::make(Int(seed % 2 == 0 ? 5 : 3),
                                  seed % 3 == 0 ? EtaleType::split : EtaleType::inert);
    // Equivariance of delta, quotient point and d_r under random g.
    for (int trial = 0; trial < 40 && pass; ++trial) {
      int n = static_cast<int>(rng.uniform(1, 3));
      TildeGl X = TildeGl::zero(n);
      for (auto& e : X.A.e) e = rng.rat(5);
      for (auto& e : X.v) e = rng.rat(5);
      for (auto& e : X.u) e = rng.rat(5);
      MatQ g(n, n);
      do {
        for (auto& e : g.e) e = Rat(rng.uniform(-4, 4));
      } while (det(g) == 0);
      TildeGl Xg = act(X, g);
      // K_+(X.g) = g^{-1} K_+(X) and K_-(X.g) = K_-(X) g, so delta^+ scales
      // by det(g)^{-1} and delta^- by det(g); d_r = delta^+ delta^- is invariant.
      if (delta_plus(Xg) * det(g) != delta_plus(X) || delta_minus(Xg) != det(g) * delta_minus(X)) {
        pass = false;
        detail = "delta equivariance failed";
      }
      QuotientData q1 = quotient_point(X), q2 = quotient_point(Xg);
      if (!(q1.a == q2.a) || q1.d_r != q2.d_r || q1.r != q2.r) {
        pass = false;
        detail = "quotient invariance failed";
      }
    }
    // gamma functional identity: gamma(c1 s + c0, chi) L(c1 s + c0, chi) = L(1 - c1 s - c0, chi^{-1}).
    for (long c1 : {-2L, -1L, 1L, 2L})
      for (long c0 : {-1L, 0L, 1L})
        for (long cv : {1L, -1L}) {
          LaurentRational g = gamma_factor(Rat(cv), c1, Rat(c0), F);
          LFactorSpec bot{Rat(cv), c1, Rat(c0), 1};
          LFactorSpec top{Rat(1) / Rat(cv), -c1, Rat(1 - c0), 1};
          if (!(g * build_L(bot, F) == build_L(top, F))) {
            pass = false;
            detail = "gamma functional identity failed";
          }
        }
    // Fourier involution on samples.
    for (int trial = 0; trial < 10 && pass; ++trial) {
      Rng r2(seed * 1000 + static_cast<std::uint64_t>(trial));
      LatticeCosetFunction phi = seeded_lcf(F, 1, r2, 2, 2);
      LatticeCosetFunction ff = fourier(F, fourier(F, phi));
      LatticeCosetFunction refl = reflect(F, phi);
      for (int s = 0; s < 8; ++s) {
        std::vector<Rat> pt{r2.rat(4), r2.rat(4), r2.rat(4)};
        if (evaluate(F, ff, pt) != evaluate(F, refl, pt)) {
          pass = false;
          detail = "Fourier involution failed";
        }
      }
    }
    // Semisimple orbit bijection counts.
    {
      QuotientPoint a;
      a.char_coeffs = {Rat(0), Rat(-1)};
      a.moments = {Rat(0), Rat(0)};
      DescentData dd = descend_auto(a);
      SemisimpleOrbits so = semisimple_orbits(F, a, dd);
      size_t expect = F.inert() ? 4 : 1;
      if (so.orbits.size() != expect) {
        pass = false;
        detail = "orbit bijection count failed";
      }
      if (F.inert() && (so.count_norm_V != 2 || so.count_other_V != 2)) {
        pass = false;
        detail = "disc additivity partition failed";
      }
    }
    // Character multiplicativity and etale involution.
    for (int trial = 0; trial < 50 && pass; ++trial) {
      Rat x = rng.nonzero_rat(9), y = rng.nonzero_rat(9);
      UnramifiedCharacter chi{Rat(seed % 2 == 0 ? -1 : 1)};
      if (chi.eval(F, x * y) != chi.eval(F, x) * chi.eval(F, y)) {
        pass = false;
        detail = "character multiplicativity failed";
      }
      EtaleScalar z{rng.rat(9), rng.rat(9)};
      if (!(et_conj(F, et_conj(F, z)) == z) || et_norm(F, et_conj(F, z)) != et_norm(F, z)) {
        pass = false;
        detail = "etale involution failed";
      }
    }
  }
  add(out, "9 property suites (equivariance, gamma identity, Fourier involution, orbit counts)",
      pass, detail, tm.secs());
  return out;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const std::string& selector, std::uint64_t seed) {
  std::vector<CheckResult> all;
  auto appendv = [&](std::vector<CheckResult> v) {
    for (auto& c : v) all.push_back(std::move(c));
  };
  if (selector == "all" || selector == "unramified" || selector == "central") appendv(criterion1());
  if (selector == "all" || selector == "unramified" || selector == "rs") appendv(criterion2());
  if (selector == "all" || selector == "oracle" || selector == "routes") appendv(criterion3(seed));
  if (selector == "all" || selector == "orbits") appendv(criterion4());
  if (selector == "all" || selector == "cayley") appendv(criterion5(seed));
  if (selector == "all" || selector == "stability") appendv(criterion6(seed));
  if (selector == "all" || selector == "transfer-n1") appendv(criterion7());
  if (selector == "all" || selector == "group") appendv(criterion8());
  if (selector == "all" || selector == "properties") appendv(criterion9());
  if (all.empty()) throw std::invalid_argument("unknown suite selector: " + selector);
  return all;
}

Json verification_report(const std::string& suite, const std::vector<CheckResult>& checks) {
  Json j;
  j["suite"] = suite;
  Json list = Json::array();
  bool all = true;
  std::string stable = suite;
  for (const auto& c : checks) {
    Json e;
    e["id"] = c.id;
    e["verdict"] = c.pass ? "pass" : "fail";
    e["detail"] = c.detail;
    e["seconds"] = c.seconds;
    list.push_back(e);
    all = all && c.pass;
    stable += "|" + c.id + "=" + (c.pass ? "pass" : "fail") + ":" + c.detail;
  }
  j["checks"] = list;
  j["verdict"] = all ? "pass" : "fail";
  // Content address over the deterministic fields; timings are informational.
  j["digest"] = hex64(fnv1a_digest(stable));
  return j;
}

}  // namespace orbw

#include "orbw/json_io.hpp"

namespace orbw {

Json rat_json(const Rat& x) { return rat_to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return rat_from_string(j.get<std::string>());
}

Json field_json(const BaseField& F) {
  Json j;
  j["p"] = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  j["etale"] = F.inert() ? "inert" : "split";
  return j;
}

BaseField field_from_json(const Json& j) {
  Int p(j.at("p").get<long>());
  std::string e = j.at("etale").get<std::string>();
  if (e != "inert" && e != "split") throw std::invalid_argument("etale must be inert or split");
  return BaseField::make(p, e == "inert" ? EtaleType::inert : EtaleType::split);
}

Json etale_json(const BaseField& F, const EtaleScalar& x) {
  Json j;
  if (F.inert()) {
    j["inert"] = Json::array({rat_json(x.a), rat_json(x.b)});
    j["d"] = static_cast<long>(mpz_get_si(F.d.get_mpz_t()));
  } else {
    j["split"] = Json::array({rat_json(x.a), rat_json(x.b)});
  }
  return j;
}

EtaleScalar etale_from_json(const BaseField& F, const Json& j) {
  if (j.is_string() || j.is_number()) return EtaleScalar::from_base(F, rat_from_json(j));
  if (j.contains("inert")) {
    if (!F.inert()) throw std::invalid_argument("inert scalar over a split base");
    if (j.contains("d") && Int(j.at("d").get<long>()) != F.d)
      throw std::invalid_argument("scalar uses a different non-residue d");
    return {rat_from_json(j.at("inert").at(0)), rat_from_json(j.at("inert").at(1))};
  }
  if (j.contains("split")) {
    if (F.inert()) throw std::invalid_argument("split scalar over an inert base");
    return {rat_from_json(j.at("split").at(0)), rat_from_json(j.at("split").at(1))};
  }
  throw std::invalid_argument("bad etale scalar");
}

Json tilde_json(const TildeGl& X) {
  Json j;
  j["n"] = X.n;
  Json A = Json::array();
  for (int i = 0; i < X.n; ++i) {
    Json row = Json::array();
    for (int c = 0; c < X.n; ++c) row.push_back(rat_json(X.A.at(i, c)));
    A.push_back(row);
  }
  j["A"] = A;
  Json v = Json::array(), u = Json::array();
  for (const auto& x : X.v) v.push_back(rat_json(x));
  for (const auto& x : X.u) u.push_back(rat_json(x));
  j["v"] = v;
  j["u"] = u;
  return j;
}

TildeGl tilde_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  TildeGl X = TildeGl::zero(n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) X.A.at(i, c) = rat_from_json(j.at("A").at(i).at(c));
  for (int i = 0; i < n; ++i) {
    X.v[static_cast<size_t>(i)] = rat_from_json(j.at("v").at(i));
    X.u[static_cast<size_t>(i)] = rat_from_json(j.at("u").at(i));
  }
  return X;
}

Json glnext_json(const GlNext& Y) {
  Json j = tilde_json(Y.X);
  j["d"] = rat_json(Y.d);
  return j;
}

GlNext glnext_from_json(const Json& j) {
  GlNext Y;
  Y.X = tilde_from_json(j);
  Y.d = rat_from_json(j.at("d"));
  return Y;
}

Json s_elem_json(const BaseField& F, const SElement& x) {
  Json j;
  j["n"] = x.n;
  Json rows = Json::array();
  for (int i = 0; i <= x.n; ++i) {
    Json row = Json::array();
    for (int c = 0; c <= x.n; ++c) row.push_back(etale_json(F, x.x.at(i, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

SElement s_elem_from_json(const BaseField& F, const Json& j) {
  int n = j.at("n").get<int>();
  MatE m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int c = 0; c <= n; ++c) m.at(i, c) = etale_from_json(F, j.at("entries").at(i).at(c));
  return SElement::make(F, m);
}

Json qpoint_json(const QuotientPoint& a) {
  Json j;
  Json cp = Json::array(), mo = Json::array();
  for (const auto& c : a.char_coeffs) cp.push_back(rat_json(c));
  for (const auto& m : a.moments) mo.push_back(rat_json(m));
  j["charpoly"] = cp;
  j["moments"] = mo;
  if (a.d) j["d"] = rat_json(*a.d);
  return j;
}

QuotientPoint qpoint_from_json(const Json& j) {
  QuotientPoint a;
  for (const auto& c : j.at("charpoly")) a.char_coeffs.push_back(rat_from_json(c));
  for (const auto& m : j.at("moments")) a.moments.push_back(rat_from_json(m));
  if (j.contains("d")) a.d = rat_from_json(j.at("d"));
  return a;
}

Json laurent_json(const LaurentRational& R) {
  Json j;
  Json num = Json::array(), den = Json::array();
  for (auto it = R.num.c.rbegin(); it != R.num.c.rend(); ++it)
    num.push_back(Json::array({it->first, rat_json(it->second)}));
  for (int e = R.den.deg(); e >= 0; --e)
    if (R.den.coeff(e) != 0) den.push_back(Json::array({e, rat_json(R.den.coeff(e))}));
  j["num"] = num;
  j["den"] = den;
  return j;
}

LaurentRational laurent_from_json(const Json& j) {
  LaurentPoly num, den;
  for (const auto& t : j.at("num")) num.set(t.at(0).get<long>(), rat_from_json(t.at(1)));
  for (const auto& t : j.at("den")) den.set(t.at(0).get<long>(), rat_from_json(t.at(1)));
  return LaurentRational::make(num, den);
}

static Json ambient_json(const Ambient& amb) {
  Json j;
  switch (amb.kind) {
    case SpaceKind::tilde_gl:
      j["space"] = "tilde_gl";
      break;
    case SpaceKind::gl_next:
      j["space"] = "gl_next";
      break;
    case SpaceKind::vec:
      j["space"] = "vec";
      break;
    case SpaceKind::u_tilde:
      j["space"] = "u_tilde";
      j["beta"] = rat_json(amb.beta);
      break;
  }
  j["n"] = amb.n;
  return j;
}

static Ambient ambient_from_json(const Json& j) {
  Ambient amb;
  std::string s = j.at("space").get<std::string>();
  if (s == "tilde_gl")
    amb.kind = SpaceKind::tilde_gl;
  else if (s == "gl_next")
    amb.kind = SpaceKind::gl_next;
  else if (s == "vec")
    amb.kind = SpaceKind::vec;
  else if (s == "u_tilde")
    amb.kind = SpaceKind::u_tilde;
  else
    throw std::invalid_argument("bad ambient space tag");
  amb.n = j.at("n").get<int>();
  if (j.contains("beta")) amb.beta = rat_from_json(j.at("beta"));
  return amb;
}

Json lcf_json(const LatticeCosetFunction& f) {
  Json j;
  j["ambient"] = ambient_json(f.ambient);
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    Json tj;
    tj["weight"] = rat_json(t.weight);
    Json c = Json::array(), d = Json::array();
    for (const auto& x : t.center) c.push_back(rat_json(x));
    for (int x : t.depths) d.push_back(x);
    tj["center"] = c;
    tj["depths"] = d;
    if (!t.phase.empty()) {
      Json ph = Json::array();
      for (const auto& x : t.phase) ph.push_back(rat_json(x));
      tj["phase"] = ph;
    }
    terms.push_back(tj);
  }
  j["terms"] = terms;
  return j;
}

LatticeCosetFunction lcf_from_json(const Json& j) {
  LatticeCosetFunction f;
  f.ambient = ambient_from_json(j.at("ambient"));
  int D = f.ambient.dim();
  for (const auto& tj : j.at("terms")) {
    CosetTerm t;
    t.weight = rat_from_json(tj.at("weight"));
    for (const auto& x : tj.at("center")) t.center.push_back(rat_from_json(x));
    if (tj.contains("depths"))
      for (const auto& x : tj.at("depths")) t.depths.push_back(x.get<int>());
    else
      t.depths.assign(static_cast<size_t>(D), tj.at("depth").get<int>());
    if (tj.contains("phase"))
      for (const auto& x : tj.at("phase")) t.phase.push_back(rat_from_json(x));
    if (static_cast<int>(t.center.size()) != D || static_cast<int>(t.depths.size()) != D)
      throw std::invalid_argument("term size does not match the ambient dimension");
    f.terms.push_back(std::move(t));
  }
  return f;
}

Json monic_json(const MonicPoly& P) {
  Json c = Json::array();
  for (const auto& x : P.cs) c.push_back(rat_json(x));
  Json j;
  j["coeffs"] = c;
  return j;
}

MonicPoly monic_from_json(const Json& j) {
  MonicPoly P;
  const Json& arr = j.is_array() ? j : j.at("coeffs");
  for (const auto& x : arr) P.cs.push_back(rat_from_json(x));
  return P;
}

Json descent_json(const DescentData& dd) {
  Json j;
  j["r"] = dd.r;
  j["a0"] = qpoint_json(dd.a0);
  j["residual"] = monic_json(dd.residual);
  Json fs = Json::array();
  for (const auto& f : dd.factors) {
    Json fj;
    fj["P"] = monic_json(f.P)["coeffs"];
    fj["mult"] = f.mult;
    fs.push_back(fj);
  }
  j["factors"] = fs;
  return j;
}

}  // namespace orbw

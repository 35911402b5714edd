#include "orbw/laurent.hpp"

namespace orbw {

LaurentPoly LaurentPoly::constant(const Rat& a) { return term(0, a); }

LaurentPoly LaurentPoly::term(long e, const Rat& a) {
  LaurentPoly f;
  if (a != 0) f.c[e] = a;
  return f;
}

Rat LaurentPoly::coeff(long e) const {
  auto it = c.find(e);
  return it == c.end() ? Rat(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (c.empty()) throw std::domain_error("min_exp of zero");
  return c.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c.empty()) throw std::domain_error("max_exp of zero");
  return c.rbegin()->first;
}

void LaurentPoly::set(long e, const Rat& a) {
  if (a == 0)
    c.erase(e);
  else
    c[e] = a;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h = f;
  for (const auto& [e, a] : g.c) h.set(e, h.coeff(e) + a);
  return h;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h = f;
  for (const auto& [e, a] : g.c) h.set(e, h.coeff(e) - a);
  return h;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly h;
  for (const auto& [e1, a1] : f.c)
    for (const auto& [e2, a2] : g.c) h.set(e1 + e2, h.coeff(e1 + e2) + a1 * a2);
  return h;
}

LaurentPoly operator*(const Rat& a, const LaurentPoly& f) {
  LaurentPoly h;
  if (a == 0) return h;
  for (const auto& [e, c] : f.c) h.c[e] = a * c;
  return h;
}

LaurentPoly lp_shift(const LaurentPoly& f, long k) {
  LaurentPoly h;
  for (const auto& [e, a] : f.c) h.c[e + k] = a;
  return h;
}

LaurentPoly lp_invert_t(const LaurentPoly& f) {
  LaurentPoly h;
  for (const auto& [e, a] : f.c) h.c[-e] = a;
  return h;
}

namespace {

Poly lp_to_poly(const LaurentPoly& f) {
  // Requires min_exp >= 0.
  Poly g;
  if (f.is_zero()) return g;
  g.c.assign(static_cast<size_t>(f.max_exp()) + 1, Rat(0));
  for (const auto& [e, a] : f.c) g.c[static_cast<size_t>(e)] = a;
  return g;
}

LaurentPoly poly_to_lp(const Poly& f, long shift = 0) {
  LaurentPoly g;
  for (int i = 0; i <= f.deg(); ++i)
    if (f.coeff(i) != 0) g.c[i + shift] = f.coeff(i);
  return g;
}

}  // namespace

LaurentRational LaurentRational::zero() { return {LaurentPoly::zero(), Poly::constant(Rat(1))}; }

LaurentRational LaurentRational::constant(const Rat& a) {
  return {LaurentPoly::constant(a), Poly::constant(Rat(1))};
}

LaurentRational LaurentRational::term(long e, const Rat& a) {
  return {LaurentPoly::term(e, a), Poly::constant(Rat(1))};
}

LaurentRational LaurentRational::make(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return zero();
  // Shift both to ordinary polynomials.
  long ns = num.min_exp(), ds = den.min_exp();
  Poly pn = lp_to_poly(lp_shift(num, -ns));
  Poly pd = lp_to_poly(lp_shift(den, -ds));
  Poly g = poly_gcd(pn, pd);
  if (g.deg() > 0) {
    pn = poly_divmod(pn, g).first;
    pd = poly_divmod(pd, g).first;
  }
  // den(0) != 0: pd has nonzero constant term after the gcd removal unless t | pd.
  long extra = 0;
  while (pd.coeff(0) == 0) {
    pd = poly_divmod(pd, Poly::x()).first;
    --extra;
  }
  while (pn.coeff(0) == 0 && pn.deg() >= 0 && !pn.is_zero()) {
    pn = poly_divmod(pn, Poly::x()).first;
    ++extra;
  }
  Rat lead = pd.lead();
  pn = (Rat(1) / lead) * pn;
  pd = (Rat(1) / lead) * pd;
  LaurentRational r;
  r.num = poly_to_lp(pn, ns - ds + extra);
  r.den = pd;
  return r;
}

LaurentRational operator+(const LaurentRational& f, const LaurentRational& g) {
  LaurentPoly n = f.num * poly_to_lp(g.den) + g.num * poly_to_lp(f.den);
  LaurentPoly d = poly_to_lp(f.den * g.den);
  return LaurentRational::make(n, d);
}

LaurentRational operator-(const LaurentRational& f, const LaurentRational& g) {
  return f + Rat(-1) * g;
}

LaurentRational operator*(const LaurentRational& f, const LaurentRational& g) {
  return LaurentRational::make(f.num * g.num, poly_to_lp(f.den * g.den));
}

LaurentRational operator*(const Rat& a, const LaurentRational& f) {
  if (a == 0) return LaurentRational::zero();
  LaurentRational h = f;
  h.num = a * h.num;
  return h;
}

LaurentRational lr_inverse(const LaurentRational& f) {
  if (f.is_zero()) throw std::domain_error("inverse of zero rational function");
  return LaurentRational::make(poly_to_lp(f.den), f.num);
}

LaurentRational lr_subst_t_inverse(const LaurentRational& f) {
  if (f.is_zero()) return f;
  return LaurentRational::make(lp_invert_t(f.num), lp_invert_t(poly_to_lp(f.den)));
}

LaurentRational geometric_series(const Rat& a, long e) {
  if (e == 0) throw std::invalid_argument("geometric series needs a nonconstant ratio");
  LaurentPoly den = LaurentPoly::constant(Rat(1)) - LaurentPoly::term(e, a);
  return LaurentRational::make(LaurentPoly::constant(Rat(1)), den);
}

HoloResult holo_at(const LaurentRational& R, const Int& p, long s0) {
  Rat t0 = pow_p(p, -s0);
  HoloResult out;
  if (R.is_zero()) {
    out.order = 0;
    out.value = 0;
    return out;
  }
  long shift = R.num.min_exp();
  Poly pn = lp_to_poly(lp_shift(R.num, -shift));
  Poly pd = R.den;
  long nmult = 0, dmult = 0;
  Poly lin;
  lin.c = {-t0, Rat(1)};
  while (pn.eval(t0) == 0) {
    pn = poly_divmod(pn, lin).first;
    ++nmult;
  }
  while (pd.eval(t0) == 0) {
    pd = poly_divmod(pd, lin).first;
    ++dmult;
  }
  out.order = dmult - nmult;
  if (out.order > 0) return out;
  Rat v = pow_rat(t0, shift) * pn.eval(t0) / pd.eval(t0);
  if (out.order < 0)
    out.value = 0;
  else
    out.value = v;
  return out;
}

std::map<long, Rat> series_window(const LaurentRational& R, long lo, long hi, bool at_zero) {
  std::map<long, Rat> out;
  if (R.is_zero()) {
    for (long e = lo; e <= hi; ++e) out[e] = 0;
    return out;
  }
  LaurentRational S = at_zero ? R : lr_subst_t_inverse(R);
  long slo = at_zero ? lo : -hi, shi = at_zero ? hi : -lo;
  // S = t^shift * pn / pd with pd(0) != 0; power-series division.
  long shift = S.num.min_exp();
  Poly pn = S.num.is_zero() ? Poly::zero() : [&] {
    Poly f;
    f.c.assign(static_cast<size_t>(S.num.max_exp() - shift) + 1, Rat(0));
    for (const auto& [e, a] : S.num.c) f.c[static_cast<size_t>(e - shift)] = a;
    return f;
  }();
  Poly pd = S.den;
  long terms = shi - shift + 1;
  std::vector<Rat> series;
  if (terms > 0) {
    series.assign(static_cast<size_t>(terms), Rat(0));
    Rat d0 = pd.coeff(0);
    for (long k = 0; k < terms; ++k) {
      Rat acc = pn.coeff(static_cast<int>(k));
      for (long j = 1; j <= k; ++j) acc -= pd.coeff(static_cast<int>(j)) * series[static_cast<size_t>(k - j)];
      series[static_cast<size_t>(k)] = acc / d0;
    }
  }
  for (long e = slo; e <= shi; ++e) {
    Rat v(0);
    if (e >= shift && e - shift < terms) v = series[static_cast<size_t>(e - shift)];
    out[at_zero ? e : -e] = v;
  }
  return out;
}

}  // namespace orbw

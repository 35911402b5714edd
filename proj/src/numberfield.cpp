#include "orbw/numberfield.hpp"

namespace orbw {

namespace {

// Dense polynomial arithmetic over F_p, coefficients in [0, p).
using FpPoly = std::vector<Int>;

FpPoly fp_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

FpPoly fp_mod(const FpPoly& f, const FpPoly& g, const Int& p) {
  FpPoly r = f;
  Int glead_inv = mod_inverse(g.back(), p);
  while (r.size() >= g.size() && !r.empty()) {
    Int c = r.back() * glead_inv % p;
    size_t shift = r.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      r[shift + i] = (r[shift + i] - c * g[i]) % p;
      if (r[shift + i] < 0) r[shift + i] += p;
    }
    r = fp_trim(r);
  }
  return r;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, const Int& p) {
  FpPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return fp_mod(fp_trim(c), m, p);
}

FpPoly fp_powmod(FpPoly base, Int e, const FpPoly& m, const Int& p) {
  FpPoly acc = {Int(1)};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = fp_mulmod(acc, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e /= 2;
  }
  return acc;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Int& p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

FpPoly reduce_mod_p(const MonicPoly& P, const Int& p) {
  FpPoly f;
  for (const auto& c : P.cs) {
    if (val_p(Rat(c.get_den()), p) != 0)
      throw std::invalid_argument("polynomial has p in a denominator; not p-integral");
    Int num(c.get_num()), den(c.get_den());
    Int v = num % p * mod_inverse(den % p + (den % p < 0 ? p : 0), p) % p;
    if (v < 0) v += p;
    f.push_back(v);
  }
  f.push_back(Int(1));
  return fp_trim(f);
}

}  // namespace

bool irreducible_mod_p(const MonicPoly& P, const Int& p) {
  // Rabin test: x^{p^n} = x mod (f, p) and gcd(x^{p^{n/q}} - x, f) = 1.
  FpPoly f = reduce_mod_p(P, p);
  int n = P.deg();
  if (static_cast<int>(f.size()) - 1 != n) return false;  // leading coeff vanished
  FpPoly x = {Int(0), Int(1)};
  Int pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  FpPoly xpn = fp_powmod(x, pn, f, p);
  FpPoly diff = xpn;
  diff.resize(std::max<size_t>(diff.size(), 2), Int(0));
  diff[1] = (diff[1] - 1) % p;
  if (diff[1] < 0) diff[1] += p;
  if (!fp_trim(diff).empty()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool isprime = true;
    for (int t = 2; t * t <= q; ++t)
      if (q % t == 0) isprime = false;
    if (!isprime) continue;
    Int pm = 1;
    for (int i = 0; i < n / q; ++i) pm *= p;
    FpPoly xm = fp_powmod(x, pm, f, p);
    FpPoly d = xm;
    d.resize(std::max<size_t>(d.size(), 2), Int(0));
    d[1] = (d[1] - 1) % p;
    if (d[1] < 0) d[1] += p;
    d = fp_trim(d);
    FpPoly g = fp_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

void check_unramified(const NumberField& K, const Int& p) {
  if (K.deg() == 0) throw std::invalid_argument("trivial number field");
  if (K.deg() == 1) return;
  if (!irreducible_mod_p(K.P, p))
    throw std::invalid_argument("ramified or split descent field unsupported: defining polynomial not irreducible mod p");
}

NFElem NFElem::from_rat(const NumberField& K, const Rat& a) {
  return {K, Poly::constant(a)};
}

NFElem NFElem::generator(const NumberField& K) {
  if (K.deg() == 1) return {K, Poly::constant(-K.P.cs[0])};
  return {K, Poly::x()};
}

static Poly reduce(const NumberField& K, const Poly& f) {
  return poly_divmod(f, K.P.poly()).second;
}

NFElem nf_add(const NFElem& x, const NFElem& y) { return {x.K, x.rep + y.rep}; }
NFElem nf_sub(const NFElem& x, const NFElem& y) { return {x.K, x.rep - y.rep}; }
NFElem nf_mul(const NFElem& x, const NFElem& y) { return {x.K, reduce(x.K, x.rep * y.rep)}; }
NFElem nf_scale(const Rat& a, const NFElem& x) { return {x.K, a * x.rep}; }

NFElem nf_inv(const NFElem& x) {
  if (x.is_zero()) throw std::domain_error("inversion of zero in number field");
  // Extended Euclid in Q[x]: s*rep + t*P = gcd = const.
  Poly r0 = x.K.P.poly(), r1 = x.rep;
  Poly s0 = Poly::zero(), s1 = Poly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0.deg() != 0) throw std::domain_error("element not invertible (defining polynomial reducible?)");
  return {x.K, reduce(x.K, (Rat(1) / r0.c[0]) * s0)};
}

MatQ nf_mult_matrix(const NFElem& x) {
  int n = x.K.deg();
  MatQ M(n, n);
  for (int j = 0; j < n; ++j) {
    Poly col = reduce(x.K, x.rep * Poly::monomial(j, Rat(1)));
    for (int i = 0; i < n; ++i) M.at(i, j) = col.coeff(i);
  }
  return M;
}

Rat nf_trace(const NFElem& x) {
  MatQ M = nf_mult_matrix(x);
  Rat tr(0);
  for (int i = 0; i < M.rows; ++i) tr += M.at(i, i);
  return tr;
}

Rat nf_norm(const NFElem& x) { return det(nf_mult_matrix(x)); }

long nf_val(const NFElem& x, const Int& p) {
  if (x.is_zero()) return VAL_INF;
  long vn = val_p(nf_norm(x), p);
  int f = x.K.deg();
  if (vn % f != 0)
    throw std::logic_error("norm valuation not divisible by residue degree; extension not unramified");
  return vn / f;
}

MatQ trace_form(const NumberField& K) {
  int n = K.deg();
  MatQ T(n, n);
  NFElem alpha = NFElem::generator(K);
  std::vector<NFElem> pows;
  NFElem cur = NFElem::from_rat(K, Rat(1));
  for (int i = 0; i < 2 * n - 1; ++i) {
    pows.push_back(cur);
    cur = nf_mul(cur, alpha);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T.at(i, j) = nf_trace(pows[static_cast<size_t>(i) + j]);
  return T;
}

}  // namespace orbw

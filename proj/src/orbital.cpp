#include "orbw/orbital.hpp"

#include <algorithm>
#include <cmath>

namespace orbw {

TildeGl CentralElement::element() const {
  TildeGl Z = TildeGl::central_rep(n, lambda, sign);
  if (g) return act(Z, *g);
  return Z;
}

static Rat xieta_at_p(const BaseField& F, const UnramifiedCharacter& xi) {
  return xi.at_p * F.eta_at_p();
}

LaurentRational L_central(const BaseField& F, const UnramifiedCharacter& xi, int n, int sign) {
  return L_central_block(n, xieta_at_p(F, xi), 1, sign, F);
}

LaurentRational L_for_orbit(const BaseField& F, const UnramifiedCharacter& xi,
                            const DescentData& dd, const std::vector<int>& epsilon) {
  if (static_cast<int>(epsilon.size()) != dd.k()) throw std::invalid_argument("epsilon length mismatch");
  LaurentRational acc = LaurentRational::constant(Rat(1));
  for (int i = 0; i < dd.k(); ++i) {
    const auto& fac = dd.factors[static_cast<size_t>(i)];
    check_unramified(fac.K(), F.p);
    int f = fac.deg();
    Rat chi = pow_rat(xieta_at_p(F, xi), f);
    acc = acc * L_central_block(fac.mult, chi, f, epsilon[static_cast<size_t>(i)], F);
  }
  return acc;
}

namespace {

struct ModMatrix {
  // Integer lift of a matrix over Z/p^d.
  std::vector<long> e;  // row-major, n x n
  int n;
};

long mod_det2(const std::vector<long>& m, long mod) {
  long d = (m[0] % mod) * (m[3] % mod) % mod - (m[1] % mod) * (m[2] % mod) % mod;
  d %= mod;
  if (d < 0) d += mod;
  return d;
}

}  // namespace

LatticeCosetFunction f_phi(const BaseField& F, const LatticeCosetFunction& phi, const Rat& lambda,
                           const UnramifiedCharacter& xi, int n) {
  if (phi.ambient.kind != SpaceKind::tilde_gl || phi.ambient.n != n)
    throw std::invalid_argument("phi must live on tilde_gl_n");
  if (!phi.plain()) throw std::invalid_argument("f_phi requires a phase-free function");
  if (n != 1 && n != 2) throw std::invalid_argument("desk-scale limit: f_phi supports n <= 2");
  (void)xi;  // unramified characters are trivial on K

  long md = std::max(1, max_depth(phi));
  long neg = std::max(0L, -min_support_val(phi, F));
  long d = md + neg;
  if (d < 1) d = 1;
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  long mod = 1;
  for (long i = 0; i < d; ++i) mod *= pl;
  if (n == 2) {
    double cells = std::pow(static_cast<double>(mod), 4.0);
    if (cells > 2.5e7)
      throw std::invalid_argument("desk-scale limit: K-congruence depth too large for n = 2");
  }

  Ambient out_amb{SpaceKind::vec, n, Rat(1)};
  LatticeCosetFunction out = LatticeCosetFunction::zero(out_amb);

  // Count |GL_n(Z/p^d)| on the fly to normalize vol(K) = 1.
  long count = 0;
  std::vector<std::vector<Rat>> contrib_centers;
  std::vector<std::vector<int>> contrib_depths;
  std::vector<Rat> contrib_weights;

  auto process_k = [&](const MatQ& k) {
    ++count;
    MatQ kinv = inverse(k);
    // X_lambda(x) . k = (lambda I + sum_i x_i M_i, x_n * w, 0) with
    // M_i = k^{-1} E_{i,i+1} k and w = k^{-1} e_n.
    std::vector<MatQ> Ms;
    for (int i = 0; i + 1 < n; ++i) {
      MatQ E(n, n);
      E.at(i, i + 1) = 1;
      Ms.push_back(kinv * E * k);
    }
    std::vector<Rat> w(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = kinv.at(i, n - 1);

    for (const auto& term : phi.terms) {
      // u-slot must contain 0.
      bool ok = true;
      size_t voff = static_cast<size_t>(n) * n, uoff = voff + static_cast<size_t>(n);
      for (int i = 0; i < n && ok; ++i)
        if (F.val(-term.center[uoff + static_cast<size_t>(i)]) < term.depths[uoff + static_cast<size_t>(i)])
          ok = false;
      if (!ok) continue;
      // Solve the per-coordinate coset conditions.
      std::vector<Coset1D> sol(static_cast<size_t>(n));
      bool has[2] = {false, false};
      std::vector<bool> have(static_cast<size_t>(n), false);
      (void)has;
      // A-slot: lambda I + sum x_i M_i congruent to C_A.
      for (int r = 0; r < n && ok; ++r)
        for (int cidx = 0; cidx < n && ok; ++cidx) {
          Rat target = term.center[static_cast<size_t>(r * n + cidx)] - (r == cidx ? lambda : Rat(0));
          int m = term.depths[static_cast<size_t>(r * n + cidx)];
          // Entry = sum_i x_i * Ms[i](r,c); at n <= 2 at most one i contributes.
          int which = -1;
          Rat coef(0);
          for (size_t i = 0; i < Ms.size(); ++i) {
            if (Ms[i].at(r, cidx) != 0) {
              which = static_cast<int>(i);
              coef = Ms[i].at(r, cidx);
            }
          }
          if (which < 0) {
            if (F.val(target) < m) ok = false;
            continue;
          }
          Coset1D c;
          c.center = target / coef;
          c.depth = static_cast<int>(m - F.val(coef));
          if (!have[static_cast<size_t>(which)]) {
            sol[static_cast<size_t>(which)] = c;
            have[static_cast<size_t>(which)] = true;
          } else {
            auto isec = intersect(F, sol[static_cast<size_t>(which)], c);
            if (!isec) {
              ok = false;
            } else {
              sol[static_cast<size_t>(which)] = *isec;
            }
          }
        }
      if (!ok) continue;
      // v-slot: x_n * w.
      for (int i = 0; i < n && ok; ++i) {
        Rat target = term.center[voff + static_cast<size_t>(i)];
        int m = term.depths[voff + static_cast<size_t>(i)];
        if (w[static_cast<size_t>(i)] == 0) {
          if (F.val(target) < m) ok = false;
          continue;
        }
        Coset1D c;
        c.center = target / w[static_cast<size_t>(i)];
        c.depth = static_cast<int>(m - F.val(w[static_cast<size_t>(i)]));
        size_t slot = static_cast<size_t>(n) - 1;
        if (!have[slot]) {
          sol[slot] = c;
          have[slot] = true;
        } else {
          auto isec = intersect(F, sol[slot], c);
          if (!isec)
            ok = false;
          else
            sol[slot] = *isec;
        }
      }
      if (!ok) continue;
      for (size_t i = 0; i < have.size(); ++i)
        if (!have[i]) throw std::logic_error("unconstrained coordinate in f_phi");
      std::vector<Rat> center(static_cast<size_t>(n));
      std::vector<int> depths(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        center[static_cast<size_t>(i)] = sol[static_cast<size_t>(i)].center;
        depths[static_cast<size_t>(i)] = sol[static_cast<size_t>(i)].depth;
      }
      contrib_centers.push_back(std::move(center));
      contrib_depths.push_back(std::move(depths));
      contrib_weights.push_back(term.weight);
    }
  };

  if (n == 1) {
    for (long a = 0; a < mod; ++a) {
      if (a % pl == 0) continue;
      MatQ k(1, 1);
      k.at(0, 0) = Rat(a);
      process_k(k);
    }
  } else {
    for (long a = 0; a < mod; ++a)
      for (long b = 0; b < mod; ++b)
        for (long c = 0; c < mod; ++c)
          for (long dd = 0; dd < mod; ++dd) {
            if (mod_det2({a, b, c, dd}, mod) % pl == 0) continue;
            MatQ k(2, 2);
            k.at(0, 0) = Rat(a);
            k.at(0, 1) = Rat(b);
            k.at(1, 0) = Rat(c);
            k.at(1, 1) = Rat(dd);
            process_k(k);
          }
  }

  Rat unit = Rat(1) / Rat(count);
  for (size_t i = 0; i < contrib_weights.size(); ++i) {
    CosetTerm t;
    t.weight = contrib_weights[i] * unit;
    t.center = contrib_centers[i];
    t.depths = contrib_depths[i];
    out.terms.push_back(std::move(t));
  }
  canonicalize(F, out);
  return out;
}

static LaurentRational central_plus_engine(const BaseField& F, const Rat& vchi, const Rat& lambda,
                                           const LatticeCosetFunction& phi,
                                           const UnramifiedCharacter& xi_for_fphi, int n) {
  LatticeCosetFunction f = f_phi(F, phi, lambda, xi_for_fphi, n);
  std::vector<Rat> chi(static_cast<size_t>(n));
  std::vector<long> e(static_cast<size_t>(n)), c0(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    chi[static_cast<size_t>(i - 1)] = pow_rat(vchi, -i);
    e[static_cast<size_t>(i - 1)] = -i;
    c0[static_cast<size_t>(i - 1)] = -i + 1;
  }
  return tate_integral_vec(F, f, chi, e, c0);
}

LaurentRational twist_factor(const BaseField& F, const UnramifiedCharacter& xi, const MatQ& g) {
  Rat dg = det(g);
  if (dg == 0) throw std::invalid_argument("singular twist");
  Rat vchi = xieta_at_p(F, xi);
  long w = F.val(dg);
  return LaurentRational::term(-w, pow_rat(vchi, -w));
}

LaurentRational orbital_central(const BaseField& F, const CentralElement& X,
                                const LatticeCosetFunction& phi, const UnramifiedCharacter& xi) {
  Rat vchi = xieta_at_p(F, xi);
  LaurentRational base;
  if (X.sign > 0) {
    base = central_plus_engine(F, vchi, X.lambda, phi, xi, X.n);
  } else {
    // I_{Z^-}(phi, chi, s) = I_{Z^+}(theta phi, chi^{-1}, -s).
    LatticeCosetFunction tphi = theta_transport(F, phi);
    LaurentRational plus = central_plus_engine(F, Rat(1) / vchi, X.lambda, tphi, xi.inverse(), X.n);
    base = lr_subst_t_inverse(plus);
  }
  if (X.g) base = base * twist_factor(F, xi, *X.g);
  return base;
}

namespace {

// Full-space Fourier/gamma evaluation at n = 1: the weighted integral of
// F(phi_lambda) against omega^-_{xi,s}(a,v,u) = chi(u)|u|^s over F^3.
LaurentRational gamma_route_fullspace_n1(const BaseField& F, const Rat& vchi, const Rat& lambda,
                                         const LatticeCosetFunction& phi) {
  std::vector<Rat> shift(3, Rat(0));
  shift[0] = lambda;
  LatticeCosetFunction phil = translate(F, phi, shift);
  LatticeCosetFunction hat = fourier(F, phil);
  LaurentRational J = LaurentRational::zero();
  for (const auto& t : hat.terms) {
    Coset1D ca{t.center[0], t.depths[0], t.phase.empty() ? Rat(0) : t.phase[0]};
    Coset1D cv{t.center[1], t.depths[1], t.phase.empty() ? Rat(0) : t.phase[2]};
    Coset1D cu{t.center[2], t.depths[2], t.phase.empty() ? Rat(0) : t.phase[1]};
    Rat pa = additive_phase_integral(F, ca);
    Rat pv = additive_phase_integral(F, cv);
    if (pa == 0 || pv == 0) continue;
    LaurentRational pu = tate_add_integral(F, cu, vchi, 1, 0);
    J = J + (t.weight * pa * pv) * pu;
  }
  // I = zeta_1 * omega^-(Z_0^-)^{-1} * gamma^+(s)^{-1} * J; the omega factor
  // is chi of a unit, hence 1, but computed from delta^-(Z_0^-).
  TildeGl z0m = TildeGl::central_rep(1, Rat(0), -1);
  Rat dm = delta_minus(z0m);
  Rat omega = pow_rat(vchi, F.val(dm));
  LaurentRational gam = gamma_pm(1, vchi, +1, F);
  return zeta_n(F, 1) * (Rat(1) / omega) * (lr_inverse(gam) * J);
}

// Reduced form of the same integral via hat{f_phi} and the torus-ratio
// substitution.
LaurentRational gamma_route_reduced(const BaseField& F, const Rat& vchi, const Rat& lambda,
                                    const LatticeCosetFunction& phi, const UnramifiedCharacter& xi,
                                    int n) {
  LatticeCosetFunction f = f_phi(F, phi, lambda, xi, n);
  LatticeCosetFunction fhat = fourier(F, f);
  std::vector<Rat> chi(static_cast<size_t>(n));
  std::vector<long> e(static_cast<size_t>(n)), c0(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    chi[static_cast<size_t>(i - 1)] = pow_rat(vchi, i);
    e[static_cast<size_t>(i - 1)] = i;
    c0[static_cast<size_t>(i - 1)] = i;
  }
  LaurentRational J = tate_integral_vec(F, fhat, chi, e, c0);
  LaurentRational gam = gamma_pm(n, vchi, +1, F);
  return lr_inverse(gam) * J;
}

}  // namespace

LaurentRational orbital_via_gamma(const BaseField& F, const CentralElement& X,
                                  const LatticeCosetFunction& phi, const UnramifiedCharacter& xi) {
  Rat vchi = xieta_at_p(F, xi);
  LaurentRational base;
  if (X.sign > 0) {
    base = gamma_route_reduced(F, vchi, X.lambda, phi, xi, X.n);
    if (X.n == 1) {
      LaurentRational full = gamma_route_fullspace_n1(F, vchi, X.lambda, phi);
      if (!(full == base))
        throw std::logic_error("full-space and reduced Fourier routes disagree at n = 1");
    }
  } else {
    LatticeCosetFunction tphi = theta_transport(F, phi);
    CentralElement Xp{X.n, +1, X.lambda, std::nullopt};
    LaurentRational plus = orbital_via_gamma(F, Xp, tphi, xi.inverse());
    base = lr_subst_t_inverse(plus);
  }
  if (X.g) base = base * twist_factor(F, xi, *X.g);
  return base;
}

// ---------------------------------------------------------------------------
// Regular semisimple route: additive box subdivision over gl_n(F).

namespace {

struct RsContext {
  const BaseField& F;
  const TildeGl& X;
  const LatticeCosetFunction& phi;
  Rat vchi;
  long det_hi;       // max possible v(det g) on the support
  long det_lo;       // min possible v(det g)
  long m_phi;        // max coset depth
  long s_phi;        // min support valuation
  MatQ Km;           // krylov rows
  long km_minv;
  long km_inv_minv;
  int max_split;
  LaurentRational acc = LaurentRational::zero();
  long cells = 0;
};

long minv_vec(const std::vector<Rat>& v, const Int& p) {
  long m = VAL_INF;
  for (const auto& x : v) m = std::min(m, val_p(x, p));
  return m;
}

void rs_recurse(RsContext& ctx, const MatQ& g0, long e) {
  const BaseField& F = ctx.F;
  int n = ctx.X.n;
  if (++ctx.cells > 4000000) throw std::runtime_error("window insufficient: rs subdivision too large");

  // Prune on the linear K_- g data: entries of K_-(X.g) = K_- g must have
  // valuation >= n * min(s_phi, 0) on the support.
  long slack = n * std::min(ctx.s_phi, 0L);
  MatQ kg = ctx.Km * g0;
  long pert_kg = ctx.km_minv + e;
  for (const auto& x : kg.e) {
    long v = val_p(x, F.p);
    if (v < slack && v < pert_kg) return;
  }
  std::vector<Rat> ug = vec_mat(ctx.X.u, g0);

  long g0minv = min_val(g0, F.p);
  Rat dg0 = det(g0);
  long dv = val_p(dg0, F.p);
  long dpb = e + (n - 1) * std::min(g0minv, e);
  if (dv >= dpb) {
    // Determinant valuation not yet certified on this cell.
    if (dpb > ctx.det_hi) return;
    if (e > ctx.max_split) throw std::runtime_error("window insufficient: rs subdivision depth cap");
    // Split.
    int dim = n * n;
    long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
    std::vector<long> digits(static_cast<size_t>(dim), 0);
    while (true) {
      MatQ child = g0;
      for (int i = 0; i < dim; ++i)
        child.e[static_cast<size_t>(i)] += Rat(digits[static_cast<size_t>(i)]) * pow_p(F.p, e);
      rs_recurse(ctx, child, e + 1);
      int k = 0;
      while (k < dim && ++digits[static_cast<size_t>(k)] == pl) digits[static_cast<size_t>(k++)] = 0;
      if (k == dim) break;
    }
    return;
  }
  if (dv > ctx.det_hi || dv < ctx.det_lo) return;

  // Certified determinant; check membership stability.
  MatQ gi = inverse(g0);
  long kappa = -std::min(0L, min_val(gi, F.p));
  long adjb = (n - 1) * std::min(g0minv, e);
  long gib = adjb - dv;
  long ipb = gib + e - kappa;  // bound on v(g^{-1} - g0^{-1})
  long mvA = min_val(ctx.X.A, F.p);
  long pb_A = std::min(ipb + std::min(0L, mvA) + std::min(g0minv, e), -kappa + std::min(0L, mvA) + e);
  long pb_v = ipb + std::min(0L, minv_vec(ctx.X.v, F.p));
  long pb_u = std::min(0L, minv_vec(ctx.X.u, F.p)) + e;
  long pb = std::min({pb_A, pb_v, pb_u});
  if (pb >= ctx.m_phi) {
    TildeGl Xg;
    Xg.n = n;
    Xg.A = gi * ctx.X.A * g0;
    Xg.v = mat_vec(gi, ctx.X.v);
    Xg.u = ug;
    Rat val = evaluate(F, ctx.phi, flatten(Xg));
    if (val != 0) {
      Rat volume = pow_p(F.p, -e * n * n);
      Rat coef = val * volume * pow_rat(ctx.vchi, dv) * pow_p(F.p, n * dv);
      ctx.acc = ctx.acc + coef * LaurentRational::term(dv, Rat(1));
    }
    return;
  }
  if (e > ctx.max_split) throw std::runtime_error("window insufficient: rs subdivision depth cap");
  int dim = n * n;
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  std::vector<long> digits(static_cast<size_t>(dim), 0);
  while (true) {
    MatQ child = g0;
    for (int i = 0; i < dim; ++i)
      child.e[static_cast<size_t>(i)] += Rat(digits[static_cast<size_t>(i)]) * pow_p(F.p, e);
    rs_recurse(ctx, child, e + 1);
    int k = 0;
    while (k < dim && ++digits[static_cast<size_t>(k)] == pl) digits[static_cast<size_t>(k++)] = 0;
    if (k == dim) break;
  }
}

}  // namespace

LaurentRational orbital_rs(const BaseField& F, const TildeGl& X, const LatticeCosetFunction& phi,
                           const UnramifiedCharacter& xi) {
  int n = X.n;
  if (n > 2) throw std::invalid_argument("desk-scale limit: orbital_rs supports n <= 2");
  if (!phi.plain()) throw std::invalid_argument("orbital_rs requires a phase-free function");
  QuotientData q = quotient_point(X);
  if (q.r != n) throw std::invalid_argument("orbital_rs requires a regular semisimple element");
  if (phi.terms.empty()) return LaurentRational::zero();

  RsContext ctx{F, X, phi, xieta_at_p(F, xi), 0, 0, 0, 0, MatQ(), 0, 0, 0};
  ctx.m_phi = max_depth(phi);
  ctx.s_phi = min_support_val(phi, F);
  MatQ Kp = krylov_cols(X.A, X.v);
  ctx.Km = krylov_rows(X.A, X.u);
  ctx.km_minv = min_val(ctx.Km, F.p);
  MatQ kp_inv = inverse(Kp);
  MatQ km_inv = inverse(ctx.Km);
  ctx.km_inv_minv = min_val(km_inv, F.p);
  long sminus = n * std::min(ctx.s_phi, 0L);
  long c_gi = sminus + min_val(kp_inv, F.p);
  long c_g = sminus + ctx.km_inv_minv;
  ctx.det_hi = -n * c_gi;
  ctx.det_lo = n * c_g;
  ctx.max_split = static_cast<int>(std::max(6L, ctx.det_hi - ctx.det_lo + ctx.m_phi + 8));

  // Support is contained in p^{c_g} gl(O); start from that single cell.
  MatQ start(n, n);
  rs_recurse(ctx, start, c_g);
  return zeta_n(F, n) * ctx.acc;
}

// ---------------------------------------------------------------------------
// General regular elements: descent product.

namespace {

Rat resultant(const Poly& f, const Poly& g) {
  // Euclidean resultant; fine at desk degrees.
  if (f.is_zero() || g.is_zero()) return Rat(0);
  Poly a = f, b = g;
  Rat acc(1);
  while (b.deg() > 0) {
    Poly r = poly_divmod(a, b).second;
    if (r.is_zero()) return Rat(0);
    acc *= pow_rat(b.lead(), a.deg() - r.deg()) * (((a.deg() % 2) && (b.deg() % 2)) ? Rat(-1) : Rat(1));
    a = b;
    b = r;
  }
  return acc * pow_rat(b.c.empty() ? Rat(0) : b.c[0], a.deg());
}

void unramified_descent_checks(const BaseField& F, const DescentData& dd, const TildeGl& X) {
  if (!is_integral(X.A, F.p) || minv_vec(X.v, F.p) < 0 || minv_vec(X.u, F.p) < 0)
    throw std::invalid_argument("general Schwartz descent not supported: element not integral");
  if (dd.r > 0) {
    std::vector<Rat> ext = extend_moments(dd.a0, 2 * dd.r);
    if (F.val(hankel_det(ext, dd.r)) != 0)
      throw std::invalid_argument("general Schwartz descent not supported: d_r(a_0) not a unit");
  }
  Poly res = dd.residual.poly();
  for (const auto& fac : dd.factors) {
    check_unramified(fac.K(), F.p);
    for (const auto& c : fac.P.cs)
      if (F.val(c) < 0 && c != 0)
        throw std::invalid_argument("general Schwartz descent not supported: factor not integral");
  }
  for (size_t i = 0; i < dd.factors.size(); ++i)
    for (size_t j = i + 1; j < dd.factors.size(); ++j) {
      Rat r = resultant(dd.factors[i].P.poly(), dd.factors[j].P.poly());
      if (F.val(r) != 0)
        throw std::invalid_argument("general Schwartz descent not supported: factors collide mod p");
    }
  if (dd.r > 0 && res.deg() > 0) {
    MonicPoly Q0;
    Q0.cs = dd.a0.char_coeffs;
    Rat r = resultant(Q0.poly(), res);
    if (F.val(r) != 0)
      throw std::invalid_argument(
          "general Schwartz descent not supported: rs part collides with central part mod p");
  }
}

// Central orbital integral over the residue-degree-f extension at block size 1:
// the component function is the standard lattice at depth `dep`.
LaurentRational central_ext_block1(const BaseField& F, const Rat& vchi_ext, int f, int sign,
                                   const NFElem& alpha, int dep, const Int& p) {
  // Lattice conditions: alpha within depth dep of 0 in the A-slot; the free
  // slot gives a one-sided geometric series in the extension uniformizer.
  if (nf_val(alpha, p) < dep) return LaurentRational::zero();
  // plus: sum_{j <= -dep} chi(pi)^j t^{fj}; minus: sum_{j >= dep}.
  if (sign > 0) {
    LaurentRational tail = geometric_series(Rat(1) / vchi_ext, -f);
    LaurentRational head = LaurentRational::term(static_cast<long>(f) * (-dep), pow_rat(vchi_ext, -dep));
    return head * tail;
  }
  LaurentRational tail = geometric_series(vchi_ext, f);
  LaurentRational head = LaurentRational::term(static_cast<long>(f) * dep, pow_rat(vchi_ext, dep));
  return head * tail;
}

}  // namespace

GeneralOrbitalResult orbital_general(const BaseField& F, const OrbitRep& rep,
                                     const DescentData& dd, const SliceFunction& phi,
                                     const UnramifiedCharacter& xi) {
  unramified_descent_checks(F, dd, rep.X);
  std::vector<int> depths(static_cast<size_t>(dd.k()) + 1, 0);
  if (!phi.global_unit) {
    if (phi.component_depths.size() != depths.size())
      throw std::invalid_argument("slice function needs one depth per component");
    depths = phi.component_depths;
  }
  Rat vchi = xieta_at_p(F, xi);

  LaurentRational I = LaurentRational::constant(phi.weight);
  if (dd.r > 0) {
    Ambient amb{SpaceKind::tilde_gl, dd.r, Rat(1)};
    LatticeCosetFunction phi0 = LatticeCosetFunction::std_lattice(amb, depths[0]);
    I = I * orbital_rs(F, rep.X0, phi0, xi);
  }
  for (int i = 0; i < dd.k(); ++i) {
    const auto& fac = dd.factors[static_cast<size_t>(i)];
    int f = fac.deg();
    int sign = rep.epsilon[static_cast<size_t>(i)];
    int dep = depths[static_cast<size_t>(i) + 1];
    if (f == 1) {
      Rat alpha = -fac.P.cs[0];
      Ambient amb{SpaceKind::tilde_gl, fac.mult, Rat(1)};
      LatticeCosetFunction phii = LatticeCosetFunction::std_lattice(amb, dep);
      CentralElement Z{fac.mult, sign, alpha, std::nullopt};
      I = I * orbital_central(F, Z, phii, xi);
    } else {
      if (fac.mult != 1)
        throw std::invalid_argument(
            "desk-scale limit: extension-field components supported at block size 1 only");
      NFElem alpha = NFElem::generator(fac.K());
      Rat vchi_ext = pow_rat(vchi, f);
      I = I * central_ext_block1(F, vchi_ext, f, sign, alpha, dep, F.p);
    }
  }
  GeneralOrbitalResult out;
  out.I = I;
  out.L = L_for_orbit(F, xi, dd, rep.epsilon);
  out.I_normalized = I * lr_inverse(out.L);
  return out;
}

}  // namespace orbw

#include "orbw/group_side.hpp"

#include <algorithm>

namespace orbw {

namespace {

// The corner embedding GL_1(E) -> GL_2(E), h -> diag(h, 1).
MatE corner(const BaseField& F, const EtaleScalar& h) {
  MatE m = MatE::identity(F, 2);
  m.at(0, 0) = h;
  return m;
}

}  // namespace

SElement nu_of(const BaseField& F, const GroupElement& gamma) {
  MatE h = et_mul(F, et_inverse(F, corner(F, gamma.g1)), gamma.g2);
  MatE x = et_mul(F, h, et_inverse(F, et_conj(F, h)));
  return SElement::make(F, x);
}

GroupTestFunction GroupTestFunction::unit(const BaseField& F) {
  GroupTestFunction f;
  f.c1 = EtaleScalar::one(F);
  f.C2 = MatE::identity(F, 2);
  f.depth = 0;
  return f;
}

namespace {

struct LatticeSystem {
  MatQ A;  // 8 x 4: h -> A h in flattened E-coordinates
  std::vector<Rat> rhs;
};

LatticeSystem flatten_system(const BaseField& F, const MatE& A, const MatE& C) {
  (void)F;
  LatticeSystem S;
  S.A = MatQ(8, 4);
  S.rhs.assign(8, Rat(0));
  int row = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        const EtaleScalar& a = A.at(i, k);
        S.A.at(row, k * 2 + j) = a.a;
        S.A.at(row + 1, k * 2 + j) = a.b;
      }
      S.rhs[static_cast<size_t>(row)] = C.at(i, j).a;
      S.rhs[static_cast<size_t>(row) + 1] = C.at(i, j).b;
      row += 2;
    }
  return S;
}

struct SolvedLattice {
  bool solvable = false;
  std::vector<Rat> particular;       // one solution of A h = rhs mod p^k
  std::vector<std::vector<Rat>> basis;  // basis of { h : A h in p^k Z^8 }
  Rat volume = 0;                    // additive volume of that lattice
};

// Exact solution of A h = rhs modulo the lattice p^k Z^8 over Z_p, by
// valuation-pivot elimination (column operations are Z_p-unimodular).
SolvedLattice padic_solve(const BaseField& F, const LatticeSystem& sys, int k) {
  MatQ M = sys.A;
  std::vector<Rat> b = sys.rhs;
  const int rows = 8, cols = 4;
  MatQ colops = MatQ::identity(cols);
  std::vector<long> expo;
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    long best = VAL_INF;
    int bi = -1, bj = -1;
    for (int i = r; i < rows; ++i)
      for (int j = c; j < cols; ++j) {
        long v = val_p(M.at(i, j), F.p);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0 || best >= VAL_INF / 2) break;
    for (int j = 0; j < cols; ++j) std::swap(M.at(r, j), M.at(bi, j));
    std::swap(b[static_cast<size_t>(r)], b[static_cast<size_t>(bi)]);
    for (int i = 0; i < rows; ++i) std::swap(M.at(i, c), M.at(i, bj));
    for (int i = 0; i < cols; ++i) std::swap(colops.at(i, c), colops.at(i, bj));
    for (int i = 0; i < rows; ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      Rat f = M.at(i, c) / M.at(r, c);
      for (int j = 0; j < cols; ++j) M.at(i, j) -= f * M.at(r, j);
      b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(r)];
    }
    for (int j = 0; j < cols; ++j) {
      if (j == c || M.at(r, j) == 0) continue;
      Rat f = M.at(r, j) / M.at(r, c);
      for (int i = 0; i < rows; ++i) M.at(i, j) -= f * M.at(i, c);
      for (int i = 0; i < cols; ++i) colops.at(i, j) -= f * colops.at(i, c);
    }
    expo.push_back(best);
    ++r;
  }
  SolvedLattice out;
  if (r < cols) return out;  // A not injective; cannot happen for invertible A
  for (int i = r; i < rows; ++i)
    if (val_p(b[static_cast<size_t>(i)], F.p) < k) return out;
  std::vector<Rat> y(static_cast<size_t>(cols), Rat(0));
  for (int c = 0; c < cols; ++c) y[static_cast<size_t>(c)] = b[static_cast<size_t>(c)] / M.at(c, c);
  out.solvable = true;
  out.particular.assign(static_cast<size_t>(cols), Rat(0));
  for (int i = 0; i < cols; ++i)
    for (int c = 0; c < cols; ++c)
      out.particular[static_cast<size_t>(i)] += colops.at(i, c) * y[static_cast<size_t>(c)];
  long tot = 0;
  for (long e : expo) tot += e;
  out.volume = pow_p(F.p, tot - 4 * k);
  for (int c = 0; c < cols; ++c) {
    std::vector<Rat> v(static_cast<size_t>(cols), Rat(0));
    Rat scale = pow_p(F.p, k - expo[static_cast<size_t>(c)]);
    for (int i = 0; i < cols; ++i) v[static_cast<size_t>(i)] = colops.at(i, c) * scale;
    out.basis.push_back(std::move(v));
  }
  return out;
}

MatQ vec_to_mat2(const std::vector<Rat>& v) {
  MatQ h(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h.at(i, j) = v[static_cast<size_t>(i * 2 + j)];
  return h;
}

long minv_vecq(const std::vector<Rat>& v, const Int& p) {
  long m = VAL_INF;
  for (const auto& x : v) m = std::min(m, val_p(x, p));
  return m;
}

}  // namespace

namespace {

// Group-measure eta-weighted mass of { h in GL_2(F) : A h in U_2 } where
// U_2 = C + p^k M_2(O_E) for k >= 1 and U_2 = GL_2(O_E) for k = 0, with
// d_group = zeta_1 zeta_2 |det h|^{-2} dh and eta on det h.
Rat group_factor_mass(const BaseField& F, const MatE& A, const MatE& C, int k) {
  Rat zz = zeta_n(F, 2);
  if (k >= 1) {
    SolvedLattice sol = padic_solve(F, flatten_system(F, A, C), k);
    if (!sol.solvable) return Rat(0);
    MatQ h0 = vec_to_mat2(sol.particular);
    Rat dh = det(h0);
    if (dh == 0) throw std::domain_error("group-side desk-scale limit: singular solution center");
    long dv = F.val(dh);
    long lmin = VAL_INF;
    for (const auto& bvec : sol.basis) lmin = std::min(lmin, minv_vecq(bvec, F.p));
    long pert = 2 * std::min({lmin, min_val(h0, F.p), 0L}) + lmin;
    if (dv >= pert)
      throw std::domain_error("group-side desk-scale limit: determinant class not constant");
    Rat etafac = F.inert() && (dv % 2 != 0) ? Rat(-1) : Rat(1);
    return zz * pow_p(F.p, 2 * dv) * etafac * sol.volume;
  }
  // k = 0: solve A h integral, then filter det(A h) to units by residues.
  MatE zero(2, 2);
  SolvedLattice sol = padic_solve(F, flatten_system(F, A, zero), 0);
  if (!sol.solvable || sol.volume == 0) return Rat(0);
  // Determinant valuation of h on the unit-det stratum is fixed by det A.
  EtaleScalar dA = et_det(F, A);
  Rat nmdA = et_norm(F, dA);
  if (nmdA == 0) throw std::domain_error("singular matrix in group factor");
  long vE_detA;
  if (F.inert()) {
    long vn = F.val(nmdA);
    if (vn % 2 != 0) return Rat(0);  // det(Ah) can never be a unit with h rational
    vE_detA = vn / 2;
  } else {
    // split: det A = (d1, d2); det(Ah) unit needs v(d1) + v(det h) = 0 = v(d2) + v(det h).
    if (F.val(dA.a) != F.val(dA.b)) return Rat(0);
    vE_detA = F.val(dA.a);
  }
  long w = -vE_detA;  // v(det h) on the stratum
  // Count unit-det residues of the lattice mod p.
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  long live = 0, total = 0;
  std::vector<long> digits(4, 0);
  // h = h_base * sum digits_i b_i with h_base absorbing the scale: enumerate
  // the lattice modulo p * lattice and test v(det) == w exactly on lifts.
  while (true) {
    std::vector<Rat> hvec(4, Rat(0));
    for (int i = 0; i < 4; ++i)
      for (int c = 0; c < 4; ++c)
        hvec[static_cast<size_t>(c)] += Rat(digits[static_cast<size_t>(i)]) * sol.basis[static_cast<size_t>(i)][static_cast<size_t>(c)];
    MatQ h = vec_to_mat2(hvec);
    Rat dh = det(h);
    ++total;
    if (dh != 0 && F.val(dh) == w) {
      // Certify constancy on the residue class: perturbation by p*basis moves
      // det by at least min basis valuation + entry valuation + 1.
      long lmin = VAL_INF;
      for (const auto& bvec : sol.basis) lmin = std::min(lmin, minv_vecq(bvec, F.p));
      long pert = 1 + lmin + std::min(min_val(h, F.p), lmin + 1);
      if (w >= pert)
        throw std::domain_error("group-side desk-scale limit: unit-det residue not certified");
      ++live;
    }
    int kk = 0;
    while (kk < 4 && ++digits[static_cast<size_t>(kk)] == pl) digits[static_cast<size_t>(kk++)] = 0;
    if (kk == 4) break;
  }
  if (live == 0) return Rat(0);
  Rat etafac = F.inert() && (w % 2 != 0) ? Rat(-1) : Rat(1);
  return zz * pow_p(F.p, 2 * w) * etafac * sol.volume * Rat(live) / Rat(total);
}

// d^x-volume of { t in F^x : t^{-1} r in c1 (1 + p^k O_E) } (k >= 1) or
// { t : t^{-1} r in O_E^x } (k = 0).
Rat scalar_factor_mass(const BaseField& F, const EtaleScalar& r, const EtaleScalar& c1, int k) {
  EtaleScalar ratio = et_mul(F, r, et_inv(F, c1));
  if (k == 0) {
    // t exists in every configuration with even E-valuation of the norm.
    Rat nm = et_norm(F, ratio);
    if (nm == 0) return Rat(0);
    if (F.inert() && F.val(nm) % 2 != 0) return Rat(0);
    if (!F.inert() && F.val(ratio.a) != F.val(ratio.b)) return Rat(0);
    return Rat(1);  // one full unit shell
  }
  // Need ratio in t (1 + p^k O_E): inert: ratio = alpha + beta sqrt(d) with
  // v(beta) >= k + v(alpha); split: components agree mod p^k relatively.
  if (F.inert()) {
    if (ratio.a == 0) return Rat(0);
    long va = F.val(ratio.a);
    if (ratio.b != 0 && F.val(ratio.b) < k + va) return Rat(0);
    return Rat(1) / Rat((F.p - 1)) / pow_p(F.p, k - 1);
  }
  if (ratio.a == 0 || ratio.b == 0) return Rat(0);
  if (F.val(ratio.a) != F.val(ratio.b)) return Rat(0);
  if (F.val(ratio.a / ratio.b - 1) < k) return Rat(0);
  return Rat(1) / Rat((F.p - 1)) / pow_p(F.p, k - 1);
}

Rat fS_value(const BaseField& F, const GroupTestFunction& f, const MatE& gy,
             const EtaleCharacter& mu, bool* s_indep) {
  // f^S_s(y) with preimage gy: support forces h1^{-1} into c1 (1 + p^k O_E)
  // inside the units, so xi(h1)|det h1|^s = const and the value is s-free.
  *s_indep = true;
  int d = std::max(1, f.depth);
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  long mod = 1;
  for (int i = 0; i < d; ++i) mod *= pl;
  std::vector<EtaleScalar> h1s;
  for (long a = 0; a < mod; ++a)
    for (long b = 0; b < mod; ++b) {
      EtaleScalar u{Rat(a), Rat(b)};
      Rat nm = et_norm(F, u);
      if (nm == 0 || F.val(nm) != 0) continue;
      if (!F.inert() && (F.val(u.a) != 0 || F.val(u.b) != 0)) continue;
      h1s.push_back(u);
    }
  Rat unit_w = Rat(1) / Rat(static_cast<long>(h1s.size()));
  Rat acc(0);
  for (const auto& h1 : h1s) {
    EtaleScalar h1inv = et_inv(F, h1);
    // h1^{-1} in c1 (1 + p^k O_E).
    EtaleScalar dev = et_sub(F, et_mul(F, h1inv, et_inv(F, f.c1)), EtaleScalar::one(F));
    if (f.depth > 0) {
      if (et_val(F, dev) < f.depth) continue;
    } else {
      if (!et_integral(F, dev)) continue;
    }
    // h1 acts on the GL_2 slot through the corner embedding.
    MatE A = et_mul(F, corner(F, h1inv), gy);
    Rat vol = group_factor_mass(F, A, f.C2, f.depth);
    if (vol == 0) continue;
    // mu(nu^{-1}(y) h2) = mu(det A) eta(det h2); the eta part is folded into
    // the mass.
    Rat mufac = mu.eval(F, et_det(F, A));
    acc += unit_w * mufac * vol;
  }
  return f.weight * acc;
}

}  // namespace

GroupPullbackResult group_pullback(const BaseField& F, const GroupTestFunction& f,
                                   const GroupElement& gamma, const CayleyParams& cp,
                                   const UnramifiedCharacter& xi, const EtaleCharacter& mu) {
  EtaleScalar two{Rat(2), Rat(0)};
  if (!F.inert()) two = EtaleScalar::from_base(F, Rat(2));
  EtaleScalar ts = et_mul(F, two, et_mul(F, cp.tau, cp.sigma));
  Rat nmts = et_norm(F, ts);
  if (nmts == 0 || F.val(nmts) != 0)
    throw std::invalid_argument("group-side hypotheses: 2 tau sigma must be a unit");
  Rat nmg1 = et_norm(F, gamma.g1);
  Rat nmdet2 = et_norm(F, et_det(F, gamma.g2));
  if (!et_integral(F, gamma.g1) || nmg1 == 0 || F.val(nmg1) != 0 ||
      !et_mat_integral(F, gamma.g2) || nmdet2 == 0 || F.val(nmdet2) != 0)
    throw std::invalid_argument("group-side hypotheses: gamma must lie in G'(O)");

  SElement x = nu_of(F, gamma);
  MatE gy = et_mul(F, et_inverse(F, corner(F, gamma.g1)), gamma.g2);

  GroupPullbackResult out;
  bool s_indep = false;
  out.fS_at_x = fS_value(F, f, gy, mu, &s_indep);
  out.fS_s_independent = s_indep;

  GlNext Y = cayley_to_lie(F, cp, x);
  const TildeGl& X = Y.X;
  if (!is_regular(X)) throw std::invalid_argument("gamma is not regular");

  QuotientData q = quotient_point(X);
  DescentData dd = descend_auto(q.a);
  std::vector<int> eps = classify_type(X, dd);
  auto reps = orbit_representatives(q.a, dd);
  const OrbitRep* match = nullptr;
  for (const auto& r : reps)
    if (r.epsilon == eps) match = &r;
  if (!match) throw std::logic_error("type classification failed to match a representative");

  SliceFunction phi;
  phi.global_unit = true;
  phi.weight = out.fS_at_x;
  GeneralOrbitalResult gen = orbital_general(F, *match, dd, phi, xi);
  // n = 1 is odd: I^sigma_gamma carries the factor mu(gamma_n gamma_{n+1}^{-1}),
  // i.e. mu(det gamma_1) mu(det gamma_2)^{-1} under the det convention.
  Rat mufac = mu.eval(F, gamma.g1) / mu.eval(F, et_det(F, gamma.g2));
  out.I_gamma = mufac * gen.I;
  out.L_gamma = gen.L;

  if (q.r == X.n) {
    // Regular semisimple: the double integral converges absolutely; compute
    // it directly as an exact sum over h1-shells and residues.
    int d = std::max(1, f.depth);
    long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
    long mod = 1;
    for (int i = 0; i < d; ++i) mod *= pl;
    std::vector<EtaleScalar> units;
    for (long a = 0; a < mod; ++a)
      for (long b = 0; b < mod; ++b) {
        EtaleScalar u{Rat(a), Rat(b)};
        Rat nm = et_norm(F, u);
        if (nm == 0 || F.val(nm) != 0) continue;
        if (!F.inert() && (F.val(u.a) != 0 || F.val(u.b) != 0)) continue;
        units.push_back(u);
      }
    Rat unit_w = Rat(1) / Rat(static_cast<long>(units.size()));
    LaurentRational acc = LaurentRational::zero();
    const long JW = 6;
    bool lo_alive = false, hi_alive = false;
    for (long j = -JW; j <= JW; ++j) {
      EtaleScalar pj = EtaleScalar::from_base(F, pow_p(F.p, j));
      bool alive = false;
      LaurentRational shell = LaurentRational::zero();
      for (const auto& u : units) {
        EtaleScalar h1 = et_mul(F, pj, u);
        EtaleScalar h1inv = et_inv(F, h1);
        Rat t1 = scalar_factor_mass(F, et_mul(F, h1inv, gamma.g1), f.c1, f.depth);
        if (t1 == 0) continue;
        // h1 acts on the GL_2 slot through the corner embedding.
        MatE A = et_mul(F, corner(F, h1inv), gamma.g2);
        Rat t2 = group_factor_mass(F, A, f.C2, f.depth);
        if (t2 == 0) continue;
        alive = true;
        // xi(h1) |det h1|^s on GL_1(E): xi composed with the norm, so the
        // uniformizer weight is xi(p)^{2j} t^{2j} in the inert case and
        // component-wise in the split case (folded the same way here).
        Rat xifac = pow_rat(xi.at_p, 2 * j);
        shell = shell + (unit_w * t1 * t2 * xifac) * LaurentRational::term(2 * j, Rat(1));
      }
      if (alive && j == -JW) lo_alive = true;
      if (alive && j == JW) hi_alive = true;
      acc = acc + (f.weight * shell);
    }
    if (lo_alive || hi_alive)
      throw std::runtime_error("window insufficient: group-side shell window too narrow");
    out.I_direct = acc;
  }
  return out;
}

}  // namespace orbw

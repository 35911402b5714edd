#include "orbw/unitary.hpp"

#include <algorithm>

namespace orbw {

std::vector<HermitianClass> hermitian_classes(const BaseField& F, int dim, int residue_deg) {
  if (F.p == 2) throw std::invalid_argument("p = 2 unsupported");
  bool two_classes = F.inert() && (residue_deg % 2 == 1);
  std::vector<HermitianClass> out;
  out.push_back({dim, true, residue_deg, Rat(1)});
  if (two_classes) out.push_back({dim, false, residue_deg, Rat(F.p)});
  return out;
}

bool matching_disc_is_norm(const BaseField& F, const TildeGl& X) {
  QuotientData q = quotient_point(X);
  if (q.r != X.n) throw std::invalid_argument("matching_disc requires a regular semisimple element");
  Rat dn = q.d_r.back();
  return F.eta(dn) == 1;
}

SemisimpleOrbits semisimple_orbits(const BaseField& F, const QuotientPoint& a,
                                   const DescentData& dd) {
  (void)a;
  SemisimpleOrbits out;
  bool h0_norm = true;
  if (dd.r > 0) {
    std::vector<Rat> ext = extend_moments(dd.a0, 2 * dd.r);
    Rat dr = hankel_det(ext, dd.r);
    h0_norm = F.eta(dr) == 1;
  }
  std::vector<bool> has_choice;
  for (const auto& fac : dd.factors) {
    check_unramified(fac.K(), F.p);
    has_choice.push_back(F.inert() && (fac.deg() % 2 == 1));
  }
  int k = dd.k();
  for (int mask = 0; mask < (1 << k); ++mask) {
    SemisimpleOrbitTag tag;
    tag.h0_norm = h0_norm;
    tag.factor_has_choice = has_choice;
    bool skip = false;
    bool parity = h0_norm;
    for (int i = 0; i < k; ++i) {
      bool bit_norm = !(mask & (1 << i));
      if (!has_choice[static_cast<size_t>(i)] && !bit_norm) {
        skip = true;
        break;
      }
      tag.factor_norm.push_back(bit_norm);
      if (!bit_norm) parity = !parity;
    }
    if (skip) continue;
    tag.assembled_norm = parity;
    out.orbits.push_back(std::move(tag));
  }
  for (const auto& t : out.orbits)
    (t.assembled_norm ? out.count_norm_V : out.count_other_V) += 1;
  return out;
}

Rat c_space(const BaseField& F, int dim, bool disc_norm, int residue_deg, int sign) {
  // Unramified configuration: all epsilon factors are 1 and eta'(-1) = 1, so
  // c^+ = eta'(disc)^{dim+1} and c^- = eta'(disc)^{dim}.
  bool eta_nontrivial = F.inert() && (residue_deg % 2 == 1);
  Rat eta_disc = (eta_nontrivial && !disc_norm) ? Rat(-1) : Rat(1);
  int e = sign > 0 ? dim + 1 : dim;
  return (e % 2 == 0) ? Rat(1) : eta_disc;
}

TransferConstants transfer_constants(const BaseField& F, const DescentData& dd,
                                     const std::vector<int>& epsilon,
                                     const SemisimpleOrbits& orbits, bool unramified,
                                     const std::optional<std::vector<Rat>>& supplied_eps) {
  if (!unramified && !supplied_eps)
    throw std::invalid_argument("ramified mode requires explicit epsilon-factor inputs");
  TransferConstants out;

  // c^+ of the slice comparison, by evaluating omega^+ through iota on a
  // structured rs sample at two perturbation depths.
  auto c_iota_at = [&](int m) -> Rat {
    TildeGl X0 = realize_rs(dd.a0);
    std::vector<int> eps(static_cast<size_t>(dd.k()), 1);
    TildeGl X = assemble_rep(dd, X0, eps);
    // Perturb each plus-block u-row by p^m (trace-dual of e_1): in expanded
    // coordinates this is p^m (tr(alpha^{j}))_j on the block's first K-copy.
    int off = dd.r;
    for (const auto& fac : dd.factors) {
      NumberField K = fac.K();
      int d = fac.deg();
      NFElem cur = NFElem::from_rat(K, Rat(1));
      for (int jj = 0; jj < d; ++jj) {
        X.u[static_cast<size_t>(off + jj)] += pow_p(F.p, m) * nf_trace(cur);
        cur = nf_mul(cur, NFElem::generator(K));
      }
      off += d * fac.mult;
    }
    Rat dplus = delta_plus(X);
    if (dplus == 0) throw std::logic_error("rs sample has vanishing delta^+");
    // omega^+ of the slice components: the X0 part plus the block parts; the
    // block delta^+ over F_i is a unit for this structure, so eta_i gives 1.
    Rat omega_slice = dd.r > 0 ? F.eta(delta_plus(X0)) : Rat(1);
    return F.eta(dplus) / omega_slice;
  };
  auto c_iota_minus_at = [&](int m) -> Rat {
    TildeGl X0 = realize_rs(dd.a0);
    std::vector<int> eps(static_cast<size_t>(dd.k()), 1);
    TildeGl X = assemble_rep(dd, X0, eps);
    int off = dd.r;
    for (const auto& fac : dd.factors) {
      NumberField K = fac.K();
      int d = fac.deg();
      NFElem cur = NFElem::from_rat(K, Rat(1));
      for (int jj = 0; jj < d; ++jj) {
        X.u[static_cast<size_t>(off + jj)] += pow_p(F.p, m) * nf_trace(cur);
        cur = nf_mul(cur, NFElem::generator(K));
      }
      off += d * fac.mult;
    }
    Rat dminus = delta_minus(X);
    if (dminus == 0) throw std::logic_error("rs sample has vanishing delta^-");
    // Block delta^- over F_i equals (unit) p^{m n_i}: eta_i of it is explicit.
    Rat omega_slice = dd.r > 0 ? F.eta(delta_minus(X0)) : Rat(1);
    for (const auto& fac : dd.factors) {
      bool eta_nontrivial = F.inert() && (fac.deg() % 2 == 1);
      if (eta_nontrivial && ((m * fac.mult) % 2 != 0)) omega_slice = -omega_slice;
    }
    return F.eta(dminus) / omega_slice;
  };

  if (dd.k() == 0 && dd.r == 0) {
    out.c_iota = 1;
  } else {
    Rat c1 = c_iota_at(4), c2 = c_iota_at(5);
    if (c1 != c2)
      throw std::logic_error("slice sign c^+ did not stabilize across perturbation depths");
    out.c_iota = c1;
    Rat cm1 = c_iota_minus_at(4), cm2 = c_iota_minus_at(6);
    if (cm1 != cm2)
      throw std::logic_error("slice sign c^- did not stabilize across perturbation depths");
  }

  TildeGl X0 = realize_rs(dd.a0);
  Rat omega_X0 = dd.r > 0 ? F.eta(delta_plus(X0)) : Rat(1);
  out.c_X = out.c_iota * omega_X0;  // assembling g = 1 for constructed reps

  // Per-orbit constants c_{X,o} = c_X * prod_i c^{eps_i}_{(V_i, h_i)}.
  for (const auto& tag : orbits.orbits) {
    Rat c = out.c_X;
    for (int i = 0; i < dd.k(); ++i) {
      const auto& fac = dd.factors[static_cast<size_t>(i)];
      c *= c_space(F, fac.mult, tag.factor_norm[static_cast<size_t>(i)], fac.deg(),
                   epsilon[static_cast<size_t>(i)]);
    }
    out.c_orbit.push_back(c);
  }
  // Representative whole-space constants for dimension n (reporting).
  int n = dd.r + dd.residual.deg();
  out.c_plus = c_space(F, n, true, 1, +1);
  out.c_minus = c_space(F, n, true, 1, -1);
  (void)supplied_eps;
  return out;
}

UnitaryVolume unitary_volume_n1(const BaseField& F, const Rat& beta) {
  (void)beta;  // the unit-group volume does not depend on the Gram scalar at n = 1
  static std::map<std::pair<long, bool>, UnitaryVolume> cache;
  std::pair<long, bool> key{static_cast<long>(mpz_get_si(F.p.get_mpz_t())), F.inert()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  UnitaryVolume out;
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  for (int dep = 1; dep <= 3; ++dep) {
    long mod = 1;
    for (int i = 0; i < dep; ++i) mod *= pl;
    long count = 0;
    if (F.inert()) {
      long dl = static_cast<long>(mpz_get_si(F.d.get_mpz_t()));
      for (long x = 0; x < mod; ++x)
        for (long y = 0; y < mod; ++y)
          if (((x * x - dl * y * y) % mod + mod) % mod == 1 % mod) ++count;
    } else {
      for (long x = 0; x < mod; ++x)
        if (x % pl != 0) ++count;
    }
    out.raw_densities.push_back(Rat(count) / pow_p(F.p, dep));
  }
  if (out.raw_densities[0] != out.raw_densities[1] || out.raw_densities[1] != out.raw_densities[2])
    throw std::logic_error("unitary volume did not stabilize across depths 1..3");
  Rat Lfac = F.inert() ? L_value(Rat(-1), 1, F) : L_value(Rat(1), 1, F);
  out.volume = Lfac * out.raw_densities[0];
  cache[key] = out;
  return out;
}

namespace {

// Residue pair representing an element of O_E (or E up to a power shift).
struct ERes {
  Int x, y;  // coordinates mod p^B
};

ERes eres_mul(const BaseField& F, const ERes& a, const ERes& b, const Int& mod) {
  if (F.inert()) {
    Int x = (a.x * b.x + F.d * a.y * b.y) % mod;
    Int y = (a.x * b.y + a.y * b.x) % mod;
    if (x < 0) x += mod;
    if (y < 0) y += mod;
    return {x, y};
  }
  Int x = a.x * b.x % mod, y = a.y * b.y % mod;
  if (x < 0) x += mod;
  if (y < 0) y += mod;
  return {x, y};
}

ERes eres_inv_unit(const BaseField& F, const ERes& a, const Int& mod) {
  if (F.inert()) {
    Int nm = (a.x * a.x - F.d * a.y * a.y) % mod;
    if (nm < 0) nm += mod;
    Int nminv = mod_inverse(nm, mod);
    Int x = a.x * nminv % mod, y = (-a.y * nminv) % mod;
    if (x < 0) x += mod;
    if (y < 0) y += mod;
    return {x, y};
  }
  return {mod_inverse(a.x, mod), mod_inverse(a.y, mod)};
}

// Enumerate the norm-one residues mod p^B (cached; the grids reuse them).
const std::vector<ERes>& norm_one_residues(const BaseField& F, const Int& mod) {
  static std::map<std::pair<long, long>, std::vector<ERes>> cache;
  long m = static_cast<long>(mpz_get_si(mod.get_mpz_t()));
  long key2 = F.inert() ? static_cast<long>(mpz_get_si(F.d.get_mpz_t())) : -1;
  auto it = cache.find({m, key2});
  if (it != cache.end()) return it->second;
  std::vector<ERes> out;
  if (F.inert()) {
    long dl = key2;
    for (long x = 0; x < m; ++x)
      for (long y = 0; y < m; ++y)
        if (((x * x - dl * y * y) % m + m) % m == 1 % m) out.push_back({Int(x), Int(y)});
  } else {
    for (long x = 0; x < m; ++x) {
      if (x % static_cast<long>(mpz_get_si(F.p.get_mpz_t())) == 0) continue;
      out.push_back({Int(x), mod_inverse(Int(x), mod)});
    }
  }
  return cache.emplace(std::make_pair(m, key2), std::move(out)).first->second;
}

Rat eval_uV_at_residue(const BaseField& F, const LatticeCosetFunction& phiV, const Rat& a,
                       const ERes& w, long wshift, int B) {
  // Coordinates: (a, p^{wshift} w.x, p^{wshift} w.y) exact from the lift;
  // memberships at depths <= B + wshift are decided correctly by the lift.
  std::vector<Rat> pt{a, pow_p(F.p, wshift) * Rat(w.x), pow_p(F.p, wshift) * Rat(w.y)};
  for (const auto& t : phiV.terms)
    for (size_t i = 1; i < 3; ++i)
      if (t.depths[i] > B + wshift)
        throw std::logic_error("residue precision too small for the coset depths");
  return evaluate(F, phiV, pt);
}

}  // namespace

Rat unitary_orbital_n1(const BaseField& F, const UTildeElement& X,
                       const LatticeCosetFunction& phiV) {
  if (phiV.ambient.kind != SpaceKind::u_tilde)
    throw std::invalid_argument("phiV must live on the unitary space");
  if (!phiV.plain()) {
    // Phased functions are evaluated pointwise; evaluation throws when a
    // phase fails to be rational, which cannot happen for the supported
    // center-0 Fourier transforms.
  }
  Rat mom = X.moment(F);
  Rat volU = unitary_volume_n1(F, X.beta).volume;
  if (et_is_zero(X.v)) {
    std::vector<Rat> pt{X.a, Rat(0), Rat(0)};
    return evaluate(F, phiV, pt);
  }
  if (mom == 0)
    throw std::invalid_argument("element is not semisimple (isotropic vector)");
  if (F.inert()) {
    int B = std::max(2, max_depth(phiV) + 2 + static_cast<int>(std::max(0L, -F.val(mom))));
    Int mod = 1;
    for (int i = 0; i < B; ++i) mod *= F.p;
    const auto& g_res = norm_one_residues(F, mod);
    // g^{-1} entries are known mod p^B; evaluate phiV at the exact lift of
    // g^{-1} v, whose memberships are decided at the chosen precision.
    Rat acc(0);
    for (const auto& g : g_res) {
      ERes ginv = eres_inv_unit(F, g, mod);
      Rat gx = Rat(ginv.x), gy = Rat(ginv.y);
      std::vector<Rat> pt{X.a, gx * X.v.a + Rat(F.d) * gy * X.v.b, gx * X.v.b + gy * X.v.a};
      acc += evaluate(F, phiV, pt);
    }
    return volU * acc / Rat(static_cast<long>(g_res.size()));
  }
  // Split: U(V) = F^x acting by (g^{-1} v1, g v2); finite shell sum.
  if (X.v.a == 0 || X.v.b == 0)
    throw std::invalid_argument("element is not semisimple (isotropic vector)");
  long lo = -(std::max(0L, -F.val(X.v.b)) + max_depth(phiV) + 2);
  long hi = std::max(0L, -F.val(X.v.a)) + max_depth(phiV) + 2;
  int dep = std::max(1, max_depth(phiV) + static_cast<int>(std::max(0L, -std::min(F.val(X.v.a), F.val(X.v.b)))));
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  long mod = 1;
  for (int i = 0; i < dep; ++i) mod *= pl;
  Rat acc(0);
  long units = 0;
  for (long u = 1; u < mod; ++u)
    if (u % pl != 0) ++units;
  for (long j = lo; j <= hi; ++j) {
    for (long u = 1; u < mod; ++u) {
      if (u % pl == 0) continue;
      Rat g = pow_p(F.p, j) * Rat(u);
      std::vector<Rat> pt{X.a, X.v.a / g, X.v.b * g};
      acc += evaluate(F, phiV, pt) / Rat(units);
    }
  }
  return acc;  // vol(O^x) = 1 with the normalized measure
}

Rat rs_orbital_value_n1(const BaseField& F, const LatticeCosetFunction& phi, const Rat& a,
                        const Rat& m) {
  if (m == 0) throw std::invalid_argument("regular semisimple requires m != 0");
  TildeGl X = TildeGl::zero(1);
  X.A.at(0, 0) = a;
  X.v[0] = 1;
  X.u[0] = m;
  long md = max_depth(phi);
  long neg = std::max(0L, -min_support_val(phi, F));
  long vm = F.val(m);
  long lo = -(md + neg + std::max(vm, -vm) + 2);
  long hi = md + neg + std::max(vm, -vm) + 2;
  int dep = static_cast<int>(std::max(1L, md + neg + 1));
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  long mod = 1;
  for (int i = 0; i < dep; ++i) mod *= pl;
  Rat acc(0);
  long units = 0;
  for (long u = 1; u < mod; ++u)
    if (u % pl != 0) ++units;
  for (long j = lo; j <= hi; ++j) {
    Rat shell(0);
    for (long u = 1; u < mod; ++u) {
      if (u % pl == 0) continue;
      TildeGl Y = TildeGl::zero(1);
      Y.A.at(0, 0) = a;
      Y.v[0] = pow_p(F.p, -j) / Rat(u);
      Y.u[0] = pow_p(F.p, j) * Rat(u) * m;
      shell += evaluate(F, phi, flatten(Y));
    }
    acc += pow_rat(Rat(F.eta_at_p()), j) * shell / Rat(units);
  }
  return acc;
}

bool TransferCheckReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

namespace {

// J on the V with Gram scalar beta for the rs class (a, m); the base vector
// is realized through mod-p^B residues (Hensel), avoiding the global norm
// obstruction of the exact rational model.
Rat unitary_rs_value(const BaseField& F, const LatticeCosetFunction& phiV, const Rat& beta,
                     const Rat& a, const Rat& m) {
  Rat mprime = m / beta;
  Rat volU = unitary_volume_n1(F, beta).volume;
  if (F.inert()) {
    long vm = F.val(mprime);
    if (vm % 2 != 0) return Rat(0);  // no vector of this norm on this space
    long ws = vm / 2;
    Rat u = mprime / pow_p(F.p, vm);
    int B = std::max(2, max_depth(phiV) + 3 + static_cast<int>(std::max(0L, -min_support_val(phiV, F))) +
                            static_cast<int>(std::max(0L, -ws)));
    Int mod = 1;
    for (int i = 0; i < B; ++i) mod *= F.p;
    // Solve x^2 - d y^2 = u mod p^B (Hensel from mod p).
    Int ures = Int(u * pow_p(F.p, 0));
    // u is a p-unit rational: reduce mod p^B.
    Int num(u.get_num()), den(u.get_den());
    Int r = num % mod * mod_inverse(((den % mod) + mod) % mod, mod) % mod;
    if (r < 0) r += mod;
    std::optional<ERes> w0;
    long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
    long dl = static_cast<long>(mpz_get_si(F.d.get_mpz_t()));
    // Find a solution mod p, then lift coordinate-wise.
    for (long x = 0; x < pl && !w0; ++x)
      for (long y = 0; y < pl && !w0; ++y) {
        Int val = (Int(x) * x - dl * Int(y) * y - r) % F.p;
        if (val < 0) val += F.p;
        if (val == 0) w0 = ERes{Int(x), Int(y)};
      }
    if (!w0) throw std::logic_error("unit norm not represented mod p on the unramified torus");
    // Hensel lift: adjust x (or y) against the derivative.
    ERes w = *w0;
    Int pk = F.p;
    for (int i = 1; i < B; ++i) {
      pk *= F.p;
      Int fval = (w.x * w.x - F.d * w.y * w.y - r) % pk;
      if (fval < 0) fval += pk;
      if (fval != 0) {
        if (w.x % F.p != 0) {
          Int inv = mod_inverse(2 * w.x % pk, pk);
          w.x = ((w.x - fval * inv) % pk + pk) % pk;
        } else {
          Int inv = mod_inverse(((-2 * F.d * w.y) % pk + pk) % pk, pk);
          w.y = ((w.y - fval * inv) % pk + pk) % pk;
        }
      }
    }
    (void)ures;
    const auto& g_res = norm_one_residues(F, mod);
    Rat acc(0);
    for (const auto& g : g_res) {
      ERes ginv = eres_inv_unit(F, g, mod);
      ERes gv = eres_mul(F, ginv, w, mod);
      acc += eval_uV_at_residue(F, phiV, a, gv, ws, B);
    }
    return volU * acc / Rat(static_cast<long>(g_res.size()));
  }
  // Split space: realize w = (mprime, 1) rationally.
  UTildeElement X{a, EtaleScalar{mprime, Rat(1)}, beta};
  return unitary_orbital_n1(F, X, phiV);
}

}  // namespace

TransferCheckReport singular_transfer_check(const BaseField& F, const LatticeCosetFunction& phi,
                                            const std::vector<LatticeCosetFunction>& phiV,
                                            int depth) {
  TransferCheckReport rep;
  auto classes = hermitian_classes(F, 1);
  if (phiV.size() != classes.size())
    throw std::invalid_argument("one phi^V per Hermitian class required");
  UnramifiedCharacter xi{Rat(1)};

  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  long mod = 1;
  for (int i = 0; i < depth; ++i) mod *= pl;

  // Exhaustive rs matching grid to the requested depth.
  auto grid_check = [&](const LatticeCosetFunction& lhs,
                        const std::vector<LatticeCosetFunction>& rhs, int sign,
                        const std::string& label) {
    bool pass = true;
    std::string detail;
    std::vector<Rat> a_grid;
    for (long r = 0; r < mod; ++r) a_grid.push_back(Rat(r));
    a_grid.push_back(Rat(1) / Rat(pl));  // a quick off-lattice sample
    for (const auto& a : a_grid) {
      for (long w = -depth; w <= depth && pass; ++w) {
        for (long u = 1; u < mod && pass; ++u) {
          if (u % pl == 0) continue;
          Rat m = pow_p(F.p, w) * Rat(u);
          Rat I = rs_orbital_value_n1(F, lhs, a, m);
          Rat omega;
          if (sign > 0)
            omega = Rat(1);  // eta(delta^+) with v-slot 1
          else
            omega = F.eta(m);  // eta(delta^-) = eta(u) = eta(m)
          Rat J(0);
          for (size_t ci = 0; ci < classes.size(); ++ci) {
            bool norm_ok = F.inert() ? (F.val(m / classes[ci].gram_last) % 2 == 0) : true;
            if (!norm_ok) continue;
            J += unitary_rs_value(F, rhs[ci], classes[ci].gram_last, a, m);
          }
          if (J != omega * I) {
            pass = false;
            detail = "first failure at a=" + rat_to_string(a) + ", m=" + rat_to_string(m) +
                     ": J=" + rat_to_string(J) + " vs omega*I=" + rat_to_string(omega * I);
          }
        }
      }
      if (!pass) break;
    }
    rep.entries.push_back({label, pass, detail});
    return pass;
  };

  rep.matched = grid_check(phi, phiV, +1, "matched-plus on the rs grid (depth " +
                                              std::to_string(depth) + ")");

  // Plus/minus flip: (phi, eta(disc V) phi^V) must be matched-minus.
  {
    std::vector<LatticeCosetFunction> flipped = phiV;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      Rat e = (F.inert() && !classes[ci].disc_norm) ? Rat(-1) : Rat(1);
      flipped[ci] = lcf_scale(e, phiV[ci]);
    }
    grid_check(phi, flipped, -1, "plus/minus flip on the rs grid");
  }

  // Fourier consistency: (F phi, eta(disc V)^n F phi^V) matched-plus (n = 1,
  // unramified epsilon = 1).
  {
    LatticeCosetFunction fphi = fourier(F, phi);
    std::vector<LatticeCosetFunction> fv;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      Rat e = (F.inert() && !classes[ci].disc_norm) ? Rat(-1) : Rat(1);
      fv.push_back(lcf_scale(e, fourier(F, phiV[ci])));
    }
    grid_check(fphi, fv, +1, "Fourier-transfer consistency on the rs grid");
  }

  // Singular transfer at the central elements Z_0^+, Z_0^-, Z_1^+.
  struct Probe {
    int sign;
    Rat lambda;
    const char* name;
  };
  for (const Probe& pr : {Probe{+1, Rat(0), "Z_0^+"}, Probe{-1, Rat(0), "Z_0^-"},
                          Probe{+1, Rat(1), "Z_1^+"}}) {
    CentralElement Z{1, pr.sign, pr.lambda, std::nullopt};
    LaurentRational I = orbital_central(F, Z, phi, xi);
    LaurentRational L = L_central(F, xi, 1, pr.sign);
    HoloResult h = holo_at(I * lr_inverse(L), F.p, 0);
    bool pass = h.order <= 0;
    Rat lhs = h.order <= 0 ? h.value : Rat(0);
    Rat rhs(0);
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      Rat c = c_space(F, 1, classes[ci].disc_norm, 1, pr.sign);
      std::vector<Rat> pt{pr.lambda, Rat(0), Rat(0)};
      rhs += c * evaluate(F, phiV[ci], pt);
    }
    pass = pass && (lhs == rhs);
    rep.entries.push_back({std::string("singular transfer at ") + pr.name,
                           pass,
                           "I_normalized=" + rat_to_string(lhs) + " vs sum c J=" + rat_to_string(rhs)});
  }
  return rep;
}

}  // namespace orbw

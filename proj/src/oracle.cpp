#include "orbw/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace orbw {

namespace {

long minv_vec(const std::vector<Rat>& v, const Int& p) {
  long m = VAL_INF;
  for (const auto& x : v) m = std::min(m, val_p(x, p));
  return m;
}

// --------------------------------------------------------------------------
// n = 1:  I = sum_j chi(p)^j t^j int_{O^x} phi(a, p^{-j} w^{-1} v, p^j w u) dw.

struct ShellValue {
  Rat value;
  bool feasible;  // false when the necessary support test already fails
};

ShellValue shell_value_n1(const BaseField& F, const TildeGl& X, const LatticeCosetFunction& phi,
                          long j, int depth_cap) {
  // Necessary support test per term.
  bool any = false;
  for (const auto& t : phi.terms) {
    bool ok = true;
    auto need = [&](const Rat& entry, const Rat& c, int m) {
      if (val_p(entry, F.p) < std::min(static_cast<long>(m), val_p(c, F.p))) ok = false;
    };
    need(X.A.at(0, 0), t.center[0], t.depths[0]);
    need(X.v[0] == 0 ? Rat(0) : pow_p(F.p, -j) * X.v[0], t.center[1], t.depths[1]);
    need(X.u[0] == 0 ? Rat(0) : pow_p(F.p, j) * X.u[0], t.center[2], t.depths[2]);
    if (ok) any = true;
  }
  if (!any) return {Rat(0), false};

  long m_phi = max_depth(phi);
  long shift = VAL_INF;
  if (X.v[0] != 0) shift = std::min(shift, -j + F.val(X.v[0]));
  if (X.u[0] != 0) shift = std::min(shift, j + F.val(X.u[0]));
  long dep = shift >= VAL_INF / 2 ? 1 : std::max(1L, m_phi - shift);
  if (dep > depth_cap)
    throw std::runtime_error("window insufficient: unit-congruence depth exceeds the cap");
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  long mod = 1;
  for (long i = 0; i < dep; ++i) mod *= pl;
  Rat acc(0);
  long count = 0;
  for (long w = 1; w < mod; ++w) {
    if (w % pl == 0) continue;
    ++count;
    TildeGl Y = TildeGl::zero(1);
    Y.A = X.A;
    Y.v[0] = pow_p(F.p, -j) * X.v[0] / Rat(w);
    Y.u[0] = pow_p(F.p, j) * X.u[0] * Rat(w);
    acc += evaluate(F, phi, flatten(Y));
  }
  return {acc / Rat(count), true};
}

LaurentRational oracle_n1(const BaseField& F, const TildeGl& X, const LatticeCosetFunction& phi,
                          const Rat& vchi, const OracleOptions& opt) {
  if (X.v[0] == 0 && X.u[0] == 0)
    throw std::invalid_argument("oracle requires a regular element (v, u) != (0, 0)");
  long M = opt.window;
  long m_phi = max_depth(phi);
  long neg = std::max(0L, -min_support_val(phi, F));

  // When v = 0 the value stabilizes for large j (u-slot falls into every
  // lattice); symmetrically for u = 0 and j -> -infinity.
  long hi_st = X.v[0] != 0 ? VAL_INF : m_phi + neg - F.val(X.u[0]) + 1;
  long lo_st = X.u[0] != 0 ? -VAL_INF : -(m_phi + neg - F.val(X.v[0]) + 1);
  if ((X.v[0] == 0 && hi_st > M) || (X.u[0] == 0 && lo_st < -M))
    throw std::runtime_error("window insufficient for the stabilization bound");

  LaurentRational acc = LaurentRational::zero();
  bool hi_feasible_beyond = false, lo_feasible_beyond = false;
  Rat hi_val(0), lo_val(0);
  for (long j = -M; j <= M; ++j) {
    ShellValue s = shell_value_n1(F, X, phi, j, opt.depth_cap);
    if (s.value != 0) acc = acc + s.value * pow_rat(vchi, j) * LaurentRational::term(j, Rat(1));
    if (j == M) {
      hi_val = s.value;
      hi_feasible_beyond = X.v[0] == 0;
    }
    if (j == -M) {
      lo_val = s.value;
      lo_feasible_beyond = X.u[0] == 0;
    }
  }
  // Upper tail.
  if (X.v[0] != 0) {
    // Support is bounded above: check the boundary shell is already dead.
    ShellValue s = shell_value_n1(F, X, phi, M + 1, opt.depth_cap);
    if (s.feasible && s.value != 0)
      throw std::runtime_error("window insufficient: upper support bound not reached");
  } else if (hi_feasible_beyond && hi_val != 0) {
    // c_j = hi_val for all j > M (stabilized); append the geometric tail.
    LaurentRational tail = geometric_series(vchi, 1);
    LaurentRational head = pow_rat(vchi, M + 1) * LaurentRational::term(M + 1, Rat(1));
    acc = acc + hi_val * (head * tail);
  }
  if (X.u[0] != 0) {
    ShellValue s = shell_value_n1(F, X, phi, -M - 1, opt.depth_cap);
    if (s.feasible && s.value != 0)
      throw std::runtime_error("window insufficient: lower support bound not reached");
  } else if (lo_feasible_beyond && lo_val != 0) {
    LaurentRational tail = geometric_series(Rat(1) / vchi, -1);
    LaurentRational head = pow_rat(vchi, -M - 1) * LaurentRational::term(-M - 1, Rat(1));
    acc = acc + lo_val * (head * tail);
  }
  return acc;
}

// --------------------------------------------------------------------------
// n = 2 cells.  g = diag(p^{v1} w1, p^{v2} w2) n(x) k; the eight coordinates
// of X.g are quadratic polynomials in x once (v, w) are fixed.

struct QuadEntry {
  Rat c0, c1, c2;  // c0 + c1 x + c2 x^2
  Rat eval(const Rat& x) const { return c0 + c1 * x + c2 * x * x; }
};

struct CellGeometry {
  std::vector<QuadEntry> pre;  // X.(a n(x)) in flattened tilde_gl coordinates
};

CellGeometry cell_geometry(const TildeGl& X, const Rat& a1, const Rat& a2) {
  // b = [[a1, a1 x], [0, a2]], b^{-1} = [[1/a1, -x/a2], [0, 1/a2]].
  const MatQ& A = X.A;
  CellGeometry G;
  G.pre.resize(8);
  Rat r12 = a1 / a2, r21 = a2 / a1;
  // row 0 of b^{-1} A b: [A11 - r12 A21 x,  A12 r21 + (A11 - A22) x - r12 A21 x^2]
  G.pre[0] = {A.at(0, 0), -r12 * A.at(1, 0), Rat(0)};
  G.pre[1] = {A.at(0, 1) * r21, A.at(0, 0) - A.at(1, 1), -r12 * A.at(1, 0)};
  // row 1: [r12 A21,  A22 + r12 A21 x]
  G.pre[2] = {r12 * A.at(1, 0), Rat(0), Rat(0)};
  G.pre[3] = {A.at(1, 1), r12 * A.at(1, 0), Rat(0)};
  // b^{-1} v = (v1/a1 - x v2/a2, v2/a2)
  G.pre[4] = {X.v[0] / a1, -X.v[1] / a2, Rat(0)};
  G.pre[5] = {X.v[1] / a2, Rat(0), Rat(0)};
  // u b = (a1 u1, a1 x u1 + a2 u2)
  G.pre[6] = {a1 * X.u[0], Rat(0), Rat(0)};
  G.pre[7] = {a2 * X.u[1], a1 * X.u[0], Rat(0)};
  return G;
}

// Apply k on the right to the flattened pre-coordinates (exact; k a unit).
std::vector<QuadEntry> apply_k(const BaseField& F, const CellGeometry& G, const MatQ& k,
                               const MatQ& kinv) {
  std::vector<QuadEntry> out(8);
  // A' = kinv * Apre * k, componentwise on the quadratic coefficients.
  auto comb = [&](int which) {
    MatQ C(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const QuadEntry& e = G.pre[static_cast<size_t>(i * 2 + j)];
        C.at(i, j) = which == 0 ? e.c0 : (which == 1 ? e.c1 : e.c2);
      }
    return kinv * C * k;
  };
  MatQ C0 = comb(0), C1 = comb(1), C2 = comb(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[static_cast<size_t>(i * 2 + j)] = {C0.at(i, j), C1.at(i, j), C2.at(i, j)};
  for (int which = 0; which < 3; ++which) {
    std::vector<Rat> vv(2), uu(2);
    for (int i = 0; i < 2; ++i) {
      const QuadEntry& ev = G.pre[static_cast<size_t>(4 + i)];
      const QuadEntry& eu = G.pre[static_cast<size_t>(6 + i)];
      vv[static_cast<size_t>(i)] = which == 0 ? ev.c0 : (which == 1 ? ev.c1 : ev.c2);
      uu[static_cast<size_t>(i)] = which == 0 ? eu.c0 : (which == 1 ? eu.c1 : eu.c2);
    }
    std::vector<Rat> nv = mat_vec(kinv, vv), nu = vec_mat(uu, k);
    for (int i = 0; i < 2; ++i) {
      auto set = [&](QuadEntry& q, const Rat& val) {
        if (which == 0)
          q.c0 = val;
        else if (which == 1)
          q.c1 = val;
        else
          q.c2 = val;
      };
      set(out[static_cast<size_t>(4 + i)], nv[static_cast<size_t>(i)]);
      set(out[static_cast<size_t>(6 + i)], nu[static_cast<size_t>(i)]);
    }
  }
  return out;
}

// Exact additive volume of { x : entries(x) lie in the coset of each term },
// weighted by term weights, via adaptive 1-d subdivision.
Rat x_volume(const BaseField& F, const std::vector<QuadEntry>& E, const LatticeCosetFunction& phi,
             long x_lo, int depth_cap, long* work) {
  struct Cell {
    Rat center;
    long e;
  };
  std::vector<Cell> stack{{Rat(0), x_lo}};
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));
  Rat vol(0);
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (++*work > 20000000) throw std::runtime_error("window insufficient: oracle work cap");
    Rat total(0);
    bool undecided = false;
    for (const auto& t : phi.terms) {
      bool in = true, decided = true;
      for (int i = 0; i < 8 && in && decided; ++i) {
        const QuadEntry& q = E[static_cast<size_t>(i)];
        Rat val = q.eval(c.center) - t.center[static_cast<size_t>(i)];
        long w = val_p(val, F.p);
        long m = t.depths[static_cast<size_t>(i)];
        // Perturbation of q over the cell: (c1 + 2 c2 x0) p^e h + c2 p^{2e} h^2.
        long pb = std::min(c.e + val_p(q.c1 + 2 * q.c2 * c.center, F.p),
                           2 * c.e + val_p(q.c2, F.p));
        if (w >= m && pb >= m) continue;        // certified inside
        if (w < m && w < pb) {                  // certified outside
          in = false;
          continue;
        }
        decided = false;
      }
      if (!decided) {
        undecided = true;
        break;
      }
      if (in) total += t.weight;
    }
    if (!undecided) {
      if (total != 0) vol += total * pow_p(F.p, -c.e);
      continue;
    }
    if (c.e - x_lo > 200)
      throw std::runtime_error("window insufficient: x-subdivision depth cap");
    for (long d = 0; d < pl; ++d)
      stack.push_back({c.center + Rat(d) * pow_p(F.p, c.e), c.e + 1});
  }
  return vol;
}

struct N2Context {
  const BaseField& F;
  const TildeGl& X;
  const LatticeCosetFunction& phi;
  const OracleOptions& opt;
  long m_phi, s_phi;
  long work = 0;
  // Enumeration caches keyed by congruence depth.
  std::map<long, std::vector<long>> unit_cache;
  std::map<long, std::pair<std::vector<MatQ>, std::vector<MatQ>>> k_cache;
};

bool slot_uniform(const LatticeCosetFunction& phi) {
  int n = phi.ambient.n;
  for (const auto& t : phi.terms) {
    for (int i = 1; i < n * n; ++i)
      if (t.depths[static_cast<size_t>(i)] != t.depths[0]) return false;
    size_t voff = static_cast<size_t>(n) * n;
    for (int i = 1; i < n; ++i) {
      if (t.depths[voff + static_cast<size_t>(i)] != t.depths[voff]) return false;
      if (t.depths[voff + static_cast<size_t>(n + i)] != t.depths[voff + static_cast<size_t>(n)])
        return false;
    }
  }
  return true;
}

// Value of the inner (alpha, n, K) integral on the torus cell (v1, v2).
// du_bump raises the unit-congruence depth; cells must stabilize under it.
Rat cell_value(N2Context& ctx, long v1, long v2, int du_bump = 0) {
  const BaseField& F = ctx.F;
  long pl = static_cast<long>(mpz_get_si(F.p.get_mpz_t()));

  // Cheap exact pruning on the x-free coordinates: their valuations do not
  // depend on the torus units, on x, or on k (slot minima are K-invariant),
  // so a value below every admissible coset level kills the cell.
  {
    // Slot minima are invariant under the torus units, x and k.  An x-free
    // entry with valuation below a term's whole-slot level (the min of
    // min(depth_i, v(center_i)) over the slot) drags the slot minimum below
    // every admissible level, so the term fails; the cell dies when every
    // term fails.
    auto dead_slot = [&](long val, size_t lo, size_t hi) {
      if (val >= VAL_INF / 2) return false;
      for (const auto& t : ctx.phi.terms) {
        long lvl = VAL_INF;
        for (size_t i = lo; i < hi; ++i)
          lvl = std::min(lvl, std::min(static_cast<long>(t.depths[i]), val_p(t.center[i], F.p)));
        if (val >= lvl) return false;
      }
      return true;
    };
    const TildeGl& X = ctx.X;
    if (X.u[0] != 0 && dead_slot(v1 + val_p(X.u[0], F.p), 6, 8)) return Rat(0);
    if (X.v[1] != 0 && dead_slot(-v2 + val_p(X.v[1], F.p), 4, 6)) return Rat(0);
    if (X.A.at(1, 0) != 0 && dead_slot(v1 - v2 + val_p(X.A.at(1, 0), F.p), 0, 4)) return Rat(0);
  }

  // x-window: necessary bound from the support of phi.  All eight entries of
  // X.g must have valuation >= s_phi; the u-slot entry a1 x u1 + a2 u2 and the
  // v-slot entry both bound |x| once the relevant slot is nonzero; a crude
  // two-sided window suffices and is certified by the subdivision itself.
  long xw = -(std::llabs(v1) + std::llabs(v2) + ctx.m_phi + std::max(0L, -ctx.s_phi) +
              std::max(0L, -min_val(ctx.X.A, F.p)) + std::max(0L, -minv_vec(ctx.X.v, F.p)) +
              std::max(0L, -minv_vec(ctx.X.u, F.p)) + 3);

  // Unit-congruence depth for the torus units: perturbing w by 1 + p^d moves
  // every entry by at least its own valuation + d; entries below s_phi are
  // already outside every coset, so d = m_phi - s_phi suffices.
  long du = std::max(1L, ctx.m_phi + std::max(0L, -ctx.s_phi)) + du_bump;
  if (du > ctx.opt.depth_cap + du_bump)
    throw std::runtime_error("window insufficient: unit depth cap");
  if (!ctx.unit_cache.count(du)) {
    long umod = 1;
    for (long i = 0; i < du; ++i) umod *= pl;
    std::vector<long> units;
    for (long w = 1; w < umod; ++w)
      if (w % pl != 0) units.push_back(w);
    ctx.unit_cache[du] = std::move(units);
  }
  const std::vector<long>& units = ctx.unit_cache[du];
  long ucount = static_cast<long>(units.size());

  // K-congruence depth: unit right translation moves entries by entry-val + d.
  // The depth-0 shortcut (Y.k in L iff Y in L) needs slot-uniform lattices.
  long dk = ctx.m_phi + std::max(0L, -ctx.s_phi);
  if (dk == 0 && !slot_uniform(ctx.phi)) dk = 1;
  if (!ctx.k_cache.count(dk)) {
    std::vector<MatQ> kreps, kinvs;
    if (dk == 0) {
      kreps.push_back(MatQ::identity(2));
      kinvs.push_back(MatQ::identity(2));
    } else {
      if (dk > ctx.opt.depth_cap) throw std::runtime_error("window insufficient: K depth cap");
      long kmod = 1;
      for (long i = 0; i < dk; ++i) kmod *= pl;
      for (long a = 0; a < kmod; ++a)
        for (long b = 0; b < kmod; ++b)
          for (long c = 0; c < kmod; ++c)
            for (long d = 0; d < kmod; ++d) {
              long det = ((a % kmod) * (d % kmod) - (b % kmod) * (c % kmod)) % kmod;
              if (det < 0) det += kmod;
              if (det % pl == 0) continue;
              MatQ k(2, 2);
              k.at(0, 0) = Rat(a);
              k.at(0, 1) = Rat(b);
              k.at(1, 0) = Rat(c);
              k.at(1, 1) = Rat(d);
              kreps.push_back(k);
              kinvs.push_back(inverse(k));
            }
    }
    ctx.k_cache[dk] = {std::move(kreps), std::move(kinvs)};
  }
  const std::vector<MatQ>& kreps = ctx.k_cache[dk].first;
  const std::vector<MatQ>& kinvs = ctx.k_cache[dk].second;
  Rat kunit = Rat(1) / Rat(static_cast<long>(kreps.size()));

  Rat acc(0);
  for (long w1 : units)
    for (long w2 : units) {
      Rat a1 = pow_p(F.p, v1) * Rat(w1);
      Rat a2 = pow_p(F.p, v2) * Rat(w2);
      CellGeometry G = cell_geometry(ctx.X, a1, a2);
      for (size_t ki = 0; ki < kreps.size(); ++ki) {
        std::vector<QuadEntry> E =
            dk == 0 ? G.pre : apply_k(F, G, kreps[ki], kinvs[ki]);
        Rat xv = x_volume(F, E, ctx.phi, xw, ctx.opt.depth_cap, &ctx.work);
        if (xv != 0) acc += xv * kunit;
      }
    }
  return acc / Rat(ucount * ucount);
}

LaurentRational oracle_n2(const BaseField& F, const TildeGl& X, const LatticeCosetFunction& phi,
                          const Rat& vchi, const OracleOptions& opt) {
  QuotientData q = quotient_point(X);
  bool rs = (q.r == 2);
  bool central = is_central(q.a);
  if (!rs && !central)
    throw std::invalid_argument(
        "oracle at n = 2 supports central-type and regular semisimple elements; use the series mode");

  long M = opt.window;
  N2Context ctx{F, X, phi, opt, max_depth(phi), min_support_val(phi, F)};

  // Stabilization bound for the geometric tails.
  long B = ctx.m_phi + std::max(0L, -ctx.s_phi) + std::max(0L, -min_val(X.A, F.p)) +
           std::max(0L, -minv_vec(X.v, F.p)) + std::max(0L, -minv_vec(X.u, F.p)) + 2;
  if (!rs && M < B + 8)
    throw std::runtime_error("window insufficient: need at least the tail bound plus 8");

  std::map<std::pair<long, long>, Rat> cells;
  for (long v1 = -M; v1 <= M; ++v1)
    for (long v2 = -M; v2 <= M; ++v2) cells[{v1, v2}] = cell_value(ctx, v1, v2);

  auto weight = [&](long w) { return pow_rat(vchi, w) * LaurentRational::term(w, Rat(1)); };

  if (rs) {
    // Finite support: the rim must be entirely dead.
    for (long v = -M; v <= M; ++v) {
      if (cells[{v, -M}] != 0 || cells[{v, M}] != 0 || cells[{-M, v}] != 0 || cells[{M, v}] != 0)
        throw std::runtime_error("window insufficient: rs support touches the rim");
    }
    LaurentRational acc = LaurentRational::zero();
    for (const auto& [vv, val] : cells) {
      if (val == 0) continue;
      // Unit-depth stabilization check on live cells (guards against
      // cancellation between torus-unit monomials for generic A).
      if (cell_value(ctx, vv.first, vv.second, 1) != val)
        throw std::runtime_error("window insufficient: unit-congruence depth did not stabilize");
      acc = acc + val * weight(vv.first + vv.second);
    }
    return acc;
  }

  // Central type: the live cells form a cone; group them by anti-diagonals
  // w = v1 + v2 (the s-weight only sees w).  For |w| <= M every live cell of
  // the anti-diagonal lies inside the box, so S(w) is complete; the deep
  // lanes of fixed parity are geometric with ratio in t^2.
  std::map<long, Rat> S;
  for (long w = -M; w <= M; ++w) {
    Rat s(0);
    for (long v1 = std::max(-M, w - M); v1 <= std::min(M, w + M); ++v1) s += cells[{v1, w - v1}];
    S[w] = s;
  }
  auto side_alive = [&](int side) {
    for (long w = side < 0 ? -M : B; w <= (side < 0 ? -B : M); ++w)
      if (S[w] != 0) return true;
    return false;
  };
  bool lo = side_alive(-1), hi = side_alive(+1);
  if (lo && hi) throw std::runtime_error("window insufficient: both anti-diagonal tails alive");

  LaurentRational acc = LaurentRational::zero();
  if (!lo && !hi) {
    for (long w = -M; w <= M; ++w)
      if (S[w] != 0) acc = acc + S[w] * weight(w);
    return acc;
  }
  int side = lo ? -1 : +1;
  long wcut = lo ? -B : B;
  for (long w = lo ? wcut : -M; w <= (lo ? M : wcut); ++w)
    if (S[w] != 0) acc = acc + S[w] * weight(w);

  // Beyond the cut each parity lane is a sum of at most two geometric
  // progressions (a cone section); detect the order <= 2 recurrence on the
  // verified zone and sum its generating function exactly.
  for (int parity = 0; parity < 2; ++parity) {
    long w_edge = wcut;
    while ((((w_edge % 2) + 2) % 2) != parity) w_edge += -side;
    std::vector<Rat> lane;  // S at w_edge + 2k*side, k = 0, 1, ...
    for (long w = w_edge; w >= -M && w <= M; w += 2 * side) lane.push_back(S[w]);
    bool all_zero = true;
    for (const auto& y : lane)
      if (y != 0) all_zero = false;
    if (all_zero) continue;
    if (lane.size() < 5)
      throw std::runtime_error("window insufficient: too few lane samples for the tail recurrence");
    MonicPoly rec;
    try {
      rec = minimal_recurrence(lane);
    } catch (const std::exception&) {
      throw std::runtime_error("window insufficient: lane values admit no short recurrence");
    }
    int r = rec.deg();
    if (r > 2) throw std::runtime_error("window insufficient: lane recurrence order exceeds 2");
    // G(x) = sum_{k>=1} y_k x^k = (N(x) - y_0 D(x)) / D(x) evaluated at the
    // monomial x = (vchi t)^{2 side}, where D(x) = 1 + c_{r-1} x + ... + c_0 x^r.
    LaurentPoly xm = LaurentPoly::term(2 * side, pow_rat(vchi, 2 * side));
    LaurentPoly D = LaurentPoly::constant(Rat(1));
    for (int j = 0; j < r; ++j) {
      LaurentPoly xp = LaurentPoly::constant(Rat(1));
      for (int t = 0; t < r - j; ++t) xp = xp * xm;
      D = D + rec.cs[static_cast<size_t>(j)] * xp;
    }
    LaurentPoly N = LaurentPoly::zero();
    for (int k = 0; k < r; ++k) {
      Rat nk = lane[static_cast<size_t>(k)];
      for (int j = 1; j <= k; ++j) {
        int ci = r - j;
        nk += rec.cs[static_cast<size_t>(ci)] * lane[static_cast<size_t>(k - j)];
      }
      LaurentPoly xp = LaurentPoly::constant(nk);
      for (int t = 0; t < k; ++t) xp = xp * xm;
      N = N + xp;
    }
    LaurentRational G = LaurentRational::make(N, D);  // sum_{k>=0} y_k x^k
    LaurentRational tail = G - LaurentRational::constant(lane[0]);
    acc = acc + weight(w_edge) * tail;
  }
  return acc;
}

}  // namespace

LaurentRational oracle_integrate(const BaseField& F, const TildeGl& X,
                                 const LatticeCosetFunction& phi, const UnramifiedCharacter& xi,
                                 const OracleOptions& opt) {
  if (!phi.plain()) throw std::invalid_argument("oracle requires a phase-free function");
  Rat vchi = xi.at_p * F.eta_at_p();
  if (X.n == 1) return oracle_n1(F, X, phi, vchi, opt);
  if (X.n == 2) return oracle_n2(F, X, phi, vchi, opt);
  throw std::invalid_argument("desk-scale limit: oracle supports n <= 2");
}

std::map<long, Rat> oracle_series(const BaseField& F, const TildeGl& X,
                                  const LatticeCosetFunction& phi, const UnramifiedCharacter& xi,
                                  long lo, long hi, const OracleOptions& opt) {
  if (X.n != 2) throw std::invalid_argument("series mode is the n = 2 cross-check");
  Rat vchi = xi.at_p * F.eta_at_p();
  Rat dp = delta_plus(X), dm = delta_minus(X);
  if (dp == 0 && dm == 0)
    throw std::invalid_argument("series mode requires delta^+ or delta^- nonzero");
  long s_phi = min_support_val(phi, F);
  long sminus = 2 * std::min(s_phi, 0L);
  N2Context ctx{F, X, phi, opt, max_depth(phi), s_phi};
  std::map<long, Rat> out;
  for (long w = lo; w <= hi; ++w) {
    // Per anti-diagonal the live torus valuations form a finite segment:
    // K_- g bounded below gives minv(g) >= c_g (so v_i in [c_g, w - c_g]);
    // on the delta^+ side g^{-1} K_+ bounded gives minv(g^{-1}) >= c_gi
    // (so v_i in [w + c_gi, -c_gi]).
    long lo_i, hi_i;
    if (dm != 0) {
      long c_g = min_val(inverse(krylov_rows(X.A, X.u)), F.p) + sminus;
      lo_i = c_g;
      hi_i = w - c_g;
    } else {
      long c_gi = min_val(inverse(krylov_cols(X.A, X.v)), F.p) + sminus;
      lo_i = w + c_gi;
      hi_i = -c_gi;
    }
    Rat acc(0);
    for (long v1 = lo_i; v1 <= hi_i; ++v1) {
      long v2 = w - v1;
      if (v2 < lo_i || v2 > hi_i) continue;
      acc += cell_value(ctx, v1, v2);
    }
    out[w] = acc * pow_rat(vchi, w);
  }
  return out;
}

}  // namespace orbw

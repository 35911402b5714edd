#include "orbw/descent.hpp"

#include <algorithm>

namespace orbw {

StratifyResult stratify(const QuotientPoint& a) {
  StratifyResult out;
  int n = a.n();
  if (static_cast<int>(a.moments.size()) != n)
    throw std::invalid_argument("quotient point needs n moments");
  std::vector<Rat> ext = extend_moments(a, 2 * n);
  out.r = stratum_index(a);
  MonicPoly Q0 = minimal_recurrence(ext, out.r);
  out.a0.char_coeffs = Q0.cs;
  out.a0.moments.assign(a.moments.begin(), a.moments.begin() + out.r);
  Poly full;
  full.c = a.char_coeffs;
  full.c.push_back(Rat(1));
  full.normalize();
  auto [quot, rem] = poly_divmod(full, Q0.poly());
  if (!rem.is_zero())
    throw std::invalid_argument(
        "inconsistent quotient point: minimal recurrence does not divide the characteristic polynomial");
  out.residual = MonicPoly::from_poly(quot);
  return out;
}

DescentData descend(const QuotientPoint& a, const std::vector<DescentFactor>& factorization) {
  StratifyResult st = stratify(a);
  Poly prod = Poly::constant(Rat(1));
  for (const auto& f : factorization) {
    if (f.mult < 1) throw std::invalid_argument("bad certificate: factor multiplicity < 1");
    if (f.P.deg() < 1) throw std::invalid_argument("bad certificate: constant factor");
    if (f.P.deg() <= 3 && !irreducible_deg_le3(f.P))
      throw std::invalid_argument("bad certificate: reducible factor of degree <= 3");
    prod = prod * poly_pow(f.P.poly(), f.mult);
  }
  for (size_t i = 0; i < factorization.size(); ++i)
    for (size_t j = i + 1; j < factorization.size(); ++j)
      if (factorization[i].P == factorization[j].P)
        throw std::invalid_argument("bad certificate: repeated factor");
  if (!(prod == st.residual.poly()))
    throw std::invalid_argument("bad certificate: product does not equal the residual polynomial");
  DescentData dd;
  dd.r = st.r;
  dd.a0 = st.a0;
  dd.residual = st.residual;
  dd.factors = factorization;
  return dd;
}

std::vector<DescentFactor> factor_supported(const MonicPoly& f) {
  std::vector<DescentFactor> out;
  Poly rem = f.poly();
  auto roots = rational_roots(rem);
  std::sort(roots.begin(), roots.end());
  for (const auto& root : roots) {
    Poly lin;
    lin.c = {-root, Rat(1)};
    int mult = poly_multiplicity(rem, lin);
    for (int i = 0; i < mult; ++i) rem = poly_divmod(rem, lin).first;
    out.push_back({MonicPoly::from_poly(lin), mult});
  }
  if (rem.deg() >= 1) {
    if (rem.deg() <= 3) {
      out.push_back({MonicPoly::from_poly(rem), 1});
    } else if (rem.deg() == 4) {
      // Try an irreducible-quadratic square: rem = (x^2 + bx + c)^2.
      Rat b = rem.coeff(3) / 2;
      Poly q;
      q.c = {(rem.coeff(2) - b * b) / 2, b, Rat(1)};
      q.normalize();
      if (poly_pow(q, 2) == rem && q.deg() == 2) {
        out.push_back({MonicPoly::from_poly(q), 2});
      } else {
        throw std::invalid_argument("factorization certificate required for this residual polynomial");
      }
    } else {
      throw std::invalid_argument("factorization certificate required for this residual polynomial");
    }
  }
  return out;
}

DescentData descend_auto(const QuotientPoint& a) {
  StratifyResult st = stratify(a);
  auto factors = st.residual.deg() == 0 ? std::vector<DescentFactor>{} : factor_supported(st.residual);
  return descend(a, factors);
}

TildeGl realize_rs(const QuotientPoint& a0) {
  int r = a0.n();
  TildeGl X0 = TildeGl::zero(r);
  if (r == 0) return X0;
  for (int i = 0; i + 1 < r; ++i) X0.A.at(i + 1, i) = 1;
  for (int i = 0; i < r; ++i) X0.A.at(i, r - 1) = -a0.char_coeffs[static_cast<size_t>(i)];
  X0.v[0] = 1;
  X0.u = a0.moments;  // u A^i v = u e_i = m_i for i < r
  return X0;
}

namespace {

// Central representative Z^{eps}_{alpha} over K in tilde-gl_m(K), expanded to
// rational data through the power basis of K^m; the u-row is composed with
// tr_{K/Q} per the trace-duality identification.
struct ExpandedBlock {
  MatQ A;
  std::vector<Rat> v;
  std::vector<Rat> u;
  int dim;
};

ExpandedBlock expand_central_block(const DescentFactor& fac, int sign,
                                   const std::vector<int>& basis_order) {
  NumberField K = fac.K();
  int d = K.deg(), m = fac.mult;
  NFElem alpha = NFElem::generator(K);
  MatQ Ma = nf_mult_matrix(alpha);
  // Power basis alpha^{basis_order[j]} in each K-coordinate; basis_order is a
  // permutation of 0..d-1 (identity for the standard assembly).
  MatQ B(d, d);
  {
    NFElem cur = NFElem::from_rat(K, Rat(1));
    std::vector<std::vector<Rat>> pows;
    for (int j = 0; j < d; ++j) {
      std::vector<Rat> col(static_cast<size_t>(d), Rat(0));
      for (int i = 0; i <= cur.rep.deg(); ++i) col[static_cast<size_t>(i)] = cur.rep.coeff(i);
      pows.push_back(col);
      cur = nf_mul(cur, alpha);
    }
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) B.at(i, j) = pows[static_cast<size_t>(basis_order[static_cast<size_t>(j)])][static_cast<size_t>(i)];
  }
  MatQ Binv = inverse(B);
  MatQ MaB = Binv * Ma * B;  // multiplication by alpha in the chosen basis

  ExpandedBlock out;
  out.dim = d * m;
  out.A = MatQ(out.dim, out.dim);
  out.v.assign(static_cast<size_t>(out.dim), Rat(0));
  out.u.assign(static_cast<size_t>(out.dim), Rat(0));
  // A = alpha Id + shift (upper for +, lower for -), as d x d blocks.
  for (int blk = 0; blk < m; ++blk)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.A.at(blk * d + i, blk * d + j) = MaB.at(i, j);
  for (int blk = 0; blk + 1 < m; ++blk) {
    int row = sign > 0 ? blk : blk + 1;
    int col = sign > 0 ? blk + 1 : blk;
    for (int i = 0; i < d; ++i) out.A.at(row * d + i, col * d + i) = 1;
  }
  if (sign > 0) {
    // v = (0,...,0,1_K) in K-coordinates.
    std::vector<Rat> one(static_cast<size_t>(d), Rat(0));
    NFElem e1 = NFElem::from_rat(K, Rat(1));
    // Coordinates of 1 in the chosen power basis.
    std::vector<Rat> rhs(static_cast<size_t>(d), Rat(0));
    for (int i = 0; i <= e1.rep.deg(); ++i) rhs[static_cast<size_t>(i)] = e1.rep.coeff(i);
    one = mat_vec(Binv, rhs);
    for (int i = 0; i < d; ++i) out.v[static_cast<size_t>((m - 1) * d + i)] = one[static_cast<size_t>(i)];
  } else {
    // u = tr_{K/Q}(1_K * .) on the last K-coordinate.
    NFElem cur = NFElem::from_rat(K, Rat(1));
    std::vector<Rat> traces;
    for (int j = 0; j < d; ++j) {
      traces.push_back(nf_trace(cur));
      cur = nf_mul(cur, NFElem::generator(K));
    }
    for (int j = 0; j < d; ++j) {
      // u(basis_j) = tr(alpha^{basis_order[j]})
      out.u[static_cast<size_t>((m - 1) * d + j)] = traces[static_cast<size_t>(basis_order[static_cast<size_t>(j)])];
    }
  }
  return out;
}

TildeGl assemble_impl(const DescentData& dd, const TildeGl& X0, const std::vector<int>& epsilon,
                      bool alt_basis) {
  if (static_cast<int>(epsilon.size()) != dd.k())
    throw std::invalid_argument("epsilon length mismatch");
  int r = dd.r;
  // h^0 part: direct sum of the expanded central blocks.
  std::vector<ExpandedBlock> blocks;
  for (int i = 0; i < dd.k(); ++i) {
    int d = dd.factors[static_cast<size_t>(i)].deg();
    std::vector<int> order(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) order[static_cast<size_t>(j)] = j;
    if (alt_basis && d > 1) std::reverse(order.begin(), order.end());
    blocks.push_back(expand_central_block(dd.factors[static_cast<size_t>(i)],
                                          epsilon[static_cast<size_t>(i)], order));
  }
  int n0 = 0;
  for (const auto& b : blocks) n0 += b.dim;
  MatQ A2(n0, n0);
  std::vector<Rat> v2(static_cast<size_t>(n0), Rat(0)), u2(static_cast<size_t>(n0), Rat(0));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.dim; ++i) {
      for (int j = 0; j < b.dim; ++j) A2.at(off + i, off + j) = b.A.at(i, j);
      v2[static_cast<size_t>(off + i)] = b.v[static_cast<size_t>(i)];
      u2[static_cast<size_t>(off + i)] = b.u[static_cast<size_t>(i)];
    }
    off += b.dim;
  }
  if (r == 0) {
    TildeGl X = TildeGl::zero(n0);
    X.A = A2;
    X.v = v2;
    X.u = u2;
    return X;
  }
  // Step-1 coupling vectors: u' K_+ = e_r^t, K_- v' = e_r.
  MatQ Kp = krylov_cols(X0.A, X0.v);
  MatQ Km = krylov_rows(X0.A, X0.u);
  std::vector<Rat> er(static_cast<size_t>(r), Rat(0));
  er[static_cast<size_t>(r) - 1] = 1;
  auto su = solve_linear(transpose(Kp), er);
  auto sv = solve_linear(Km, er);
  if (!su.consistent || !sv.consistent)
    throw std::invalid_argument("slice element is not in the rank-r stratum");
  std::vector<Rat> uprime = su.x, vprime = sv.x;

  int n = r + n0;
  TildeGl X = TildeGl::zero(n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) X.A.at(i, j) = X0.A.at(i, j);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) X.A.at(r + i, r + j) = A2.at(i, j);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n0; ++j) X.A.at(i, r + j) = vprime[static_cast<size_t>(i)] * u2[static_cast<size_t>(j)];
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < r; ++j) X.A.at(r + i, j) = v2[static_cast<size_t>(i)] * uprime[static_cast<size_t>(j)];
  for (int i = 0; i < r; ++i) {
    X.v[static_cast<size_t>(i)] = X0.v[static_cast<size_t>(i)];
    X.u[static_cast<size_t>(i)] = X0.u[static_cast<size_t>(i)];
  }
  return X;
}

}  // namespace

TildeGl assemble_rep(const DescentData& dd, const TildeGl& X0, const std::vector<int>& epsilon) {
  return assemble_impl(dd, X0, epsilon, false);
}

TildeGl assemble_rep_alt(const DescentData& dd, const TildeGl& X0, const std::vector<int>& epsilon) {
  return assemble_impl(dd, X0, epsilon, true);
}

std::vector<OrbitRep> orbit_representatives(const QuotientPoint& a, const DescentData& dd) {
  TildeGl X0 = realize_rs(dd.a0);
  int k = dd.k();
  std::vector<OrbitRep> reps;
  for (int mask = 0; mask < (1 << k); ++mask) {
    OrbitRep rep;
    rep.epsilon.assign(static_cast<size_t>(k), 1);
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) rep.epsilon[static_cast<size_t>(i)] = -1;
    rep.X = assemble_rep(dd, X0, rep.epsilon);
    rep.X0 = X0;
    std::string desc = "iota_h(X0";
    for (int i = 0; i < k; ++i)
      desc += std::string(", Z^") + (rep.epsilon[static_cast<size_t>(i)] > 0 ? "+" : "-") +
              "_alpha" + std::to_string(i + 1);
    rep.slice_desc = desc + ")";
    QuotientData q = quotient_point(rep.X);
    if (!(q.a == a))
      throw std::logic_error("assembled representative does not map to the input quotient point");
    if (!is_regular(rep.X)) throw std::logic_error("assembled representative is not regular");
    reps.push_back(std::move(rep));
  }
  // All-plus first, then lexicographic on epsilon.
  std::sort(reps.begin(), reps.end(), [](const OrbitRep& x, const OrbitRep& y) {
    return x.epsilon > y.epsilon;
  });
  return reps;
}

std::vector<int> classify_type(const TildeGl& X, const DescentData& dd) {
  if (!is_regular(X)) throw std::invalid_argument("classify_type requires a regular element");
  Poly F = charpoly(X.A).poly();
  MatQ K = krylov_cols(X.A, X.v);
  std::vector<int> eps;
  for (const auto& fac : dd.factors) {
    int mt = poly_multiplicity(F, fac.P.poly());
    Poly Pm = poly_pow(fac.P.poly(), mt);
    Poly C = poly_divmod(F, Pm).first;
    // Bezout: S*Pm + T*C = 1; projector onto ker Pm(A) is (T*C)(A).
    Poly r0 = Pm, r1 = C;
    Poly t0 = Poly::zero(), t1 = Poly::constant(Rat(1));
    while (!r1.is_zero()) {
      auto [q, r2] = poly_divmod(r0, r1);
      Poly t2 = t0 - q * t1;
      r0 = r1;
      r1 = r2;
      t0 = t1;
      t1 = t2;
    }
    if (r0.deg() != 0) throw std::logic_error("primary factors not coprime");
    Poly T = (Rat(1) / r0.c[0]) * t0;
    Poly TC = T * C;
    // Evaluate TC at A.
    MatQ proj(X.n, X.n);
    MatQ pw = MatQ::identity(X.n);
    for (int i = 0; i <= TC.deg(); ++i) {
      proj = proj + TC.coeff(i) * pw;
      pw = pw * X.A;
    }
    MatQ PK = proj * K;
    long rank = solve_linear(PK, std::vector<Rat>(static_cast<size_t>(X.n), Rat(0))).rank;
    int udim = mt * fac.deg();
    eps.push_back(rank == udim ? 1 : -1);
  }
  return eps;
}

}  // namespace orbw

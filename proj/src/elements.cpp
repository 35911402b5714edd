#include "orbw/elements.hpp"

namespace orbw {

TildeGl TildeGl::zero(int n) {
  TildeGl X;
  X.n = n;
  X.A = MatQ(n, n);
  X.v.assign(n, Rat(0));
  X.u.assign(n, Rat(0));
  return X;
}

TildeGl TildeGl::central_rep(int n, const Rat& lambda, int sign) {
  TildeGl X = zero(n);
  for (int i = 0; i < n; ++i) X.A.at(i, i) = lambda;
  if (sign > 0) {
    for (int i = 0; i + 1 < n; ++i) X.A.at(i, i + 1) = 1;
    X.v[static_cast<size_t>(n) - 1] = 1;
  } else {
    for (int i = 0; i + 1 < n; ++i) X.A.at(i + 1, i) = 1;
    X.u[static_cast<size_t>(n) - 1] = 1;
  }
  return X;
}

MatQ GlNext::full() const {
  int n = X.n;
  MatQ M(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = X.A.at(i, j);
  for (int i = 0; i < n; ++i) {
    M.at(i, n) = X.v[static_cast<size_t>(i)];
    M.at(n, i) = X.u[static_cast<size_t>(i)];
  }
  M.at(n, n) = d;
  return M;
}

GlNext GlNext::from_matrix(const MatQ& M) {
  if (M.rows != M.cols || M.rows < 1) throw std::invalid_argument("bad gl_{n+1} matrix");
  int n = M.rows - 1;
  GlNext Y;
  Y.X = TildeGl::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Y.X.A.at(i, j) = M.at(i, j);
  for (int i = 0; i < n; ++i) {
    Y.X.v[static_cast<size_t>(i)] = M.at(i, n);
    Y.X.u[static_cast<size_t>(i)] = M.at(n, i);
  }
  Y.d = M.at(n, n);
  return Y;
}

SElement SElement::make(const BaseField& F, const MatE& x) {
  if (x.rows != x.cols || x.rows < 1) throw std::invalid_argument("bad S matrix");
  MatE prod = et_mul(F, x, et_conj(F, x));
  if (!(prod == MatE::identity(F, x.rows)))
    throw std::invalid_argument("x x^c != 1: not an element of S");
  SElement s;
  s.n = x.rows - 1;
  s.x = x;
  return s;
}

CayleyParams CayleyParams::validated(const BaseField& F, const EtaleScalar& tau,
                                     const EtaleScalar& sigma) {
  EtaleScalar tc = et_conj(F, tau);
  if (!(et_add(F, tc, tau) == EtaleScalar::zero()))
    throw std::invalid_argument("tau^c != -tau");
  if (!et_invertible(F, tau)) throw std::invalid_argument("tau not invertible");
  if (et_norm(F, sigma) != 1) throw std::invalid_argument("sigma sigma^c != 1");
  return {tau, sigma};
}

TildeGl act(const TildeGl& X, const MatQ& g) {
  MatQ gi = inverse(g);
  TildeGl Y;
  Y.n = X.n;
  Y.A = gi * X.A * g;
  Y.v = mat_vec(gi, X.v);
  Y.u = vec_mat(X.u, g);
  return Y;
}

std::vector<Rat> mat_vec(const MatQ& A, const std::vector<Rat>& v) {
  std::vector<Rat> out(static_cast<size_t>(A.rows), Rat(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) out[static_cast<size_t>(i)] += A.at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& u, const MatQ& A) {
  std::vector<Rat> out(static_cast<size_t>(A.cols), Rat(0));
  for (int j = 0; j < A.cols; ++j)
    for (int i = 0; i < A.rows; ++i) out[static_cast<size_t>(j)] += u[static_cast<size_t>(i)] * A.at(i, j);
  return out;
}

Rat dot(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  Rat acc(0);
  for (size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

MatQ krylov_cols(const MatQ& A, const std::vector<Rat>& v) {
  int n = A.rows;
  MatQ K(n, n);
  std::vector<Rat> cur = v;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) K.at(i, j) = cur[static_cast<size_t>(i)];
    cur = mat_vec(A, cur);
  }
  return K;
}

MatQ krylov_rows(const MatQ& A, const std::vector<Rat>& u) {
  int n = A.rows;
  MatQ K(n, n);
  std::vector<Rat> cur = u;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) K.at(i, j) = cur[static_cast<size_t>(j)];
    cur = vec_mat(cur, A);
  }
  return K;
}

Rat delta_plus(const TildeGl& X) { return det(krylov_cols(X.A, X.v)); }
Rat delta_minus(const TildeGl& X) { return det(krylov_rows(X.A, X.u)); }
Rat delta_plus(const GlNext& Y) { return delta_plus(Y.X); }
Rat delta_minus(const GlNext& Y) { return delta_minus(Y.X); }

static void s_blocks(const BaseField& F, const SElement& s, MatE& A, std::vector<EtaleScalar>& b,
                     std::vector<EtaleScalar>& c) {
  int n = s.n;
  A = MatE(n, n);
  b.assign(static_cast<size_t>(n), EtaleScalar::zero());
  c.assign(static_cast<size_t>(n), EtaleScalar::zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A.at(i, j) = s.x.at(i, j);
    b[static_cast<size_t>(i)] = s.x.at(i, n);
    c[static_cast<size_t>(i)] = s.x.at(n, i);
  }
}

EtaleScalar Delta_plus(const BaseField& F, const SElement& s) {
  MatE A;
  std::vector<EtaleScalar> b, c;
  s_blocks(F, s, A, b, c);
  int n = s.n;
  MatE K(n, n);
  std::vector<EtaleScalar> cur = b;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) K.at(i, j) = cur[static_cast<size_t>(i)];
    std::vector<EtaleScalar> nxt(static_cast<size_t>(n), EtaleScalar::zero());
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        nxt[static_cast<size_t>(i)] = et_add(F, nxt[static_cast<size_t>(i)], et_mul(F, A.at(i, k), cur[static_cast<size_t>(k)]));
    cur = nxt;
  }
  return et_det(F, K);
}

EtaleScalar Delta_minus(const BaseField& F, const SElement& s) {
  MatE A;
  std::vector<EtaleScalar> b, c;
  s_blocks(F, s, A, b, c);
  int n = s.n;
  MatE K(n, n);
  std::vector<EtaleScalar> cur = c;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) K.at(i, j) = cur[static_cast<size_t>(j)];
    std::vector<EtaleScalar> nxt(static_cast<size_t>(n), EtaleScalar::zero());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        nxt[static_cast<size_t>(j)] = et_add(F, nxt[static_cast<size_t>(j)], et_mul(F, cur[static_cast<size_t>(k)], A.at(k, j)));
    cur = nxt;
  }
  return et_det(F, K);
}

std::vector<Rat> moments_of(const TildeGl& X, int count) {
  std::vector<Rat> m;
  std::vector<Rat> cur = X.v;
  for (int i = 0; i < count; ++i) {
    m.push_back(dot(X.u, cur));
    cur = mat_vec(X.A, cur);
  }
  return m;
}

std::vector<Rat> extend_moments(const QuotientPoint& a, int len) {
  int n = a.n();
  std::vector<Rat> m = a.moments;
  m.resize(static_cast<size_t>(std::max(len, n)));
  for (int k = n; k < len; ++k) {
    Rat acc(0);
    for (int i = 0; i < n; ++i) acc -= a.char_coeffs[static_cast<size_t>(i)] * m[static_cast<size_t>(k - n + i)];
    m[static_cast<size_t>(k)] = acc;
  }
  m.resize(static_cast<size_t>(len));
  return m;
}

std::vector<Rat> d_r_values(const QuotientPoint& a) {
  int n = a.n();
  std::vector<Rat> ext = extend_moments(a, 2 * n);
  std::vector<Rat> out;
  for (int r = 1; r <= n; ++r) out.push_back(hankel_det(ext, r));
  return out;
}

int stratum_index(const QuotientPoint& a) {
  auto ds = d_r_values(a);
  int r = 0;
  for (int i = 0; i < static_cast<int>(ds.size()); ++i)
    if (ds[static_cast<size_t>(i)] != 0) r = i + 1;
  return r;
}

QuotientData quotient_point(const TildeGl& X) {
  QuotientData qd;
  qd.a.char_coeffs = charpoly(X.A).cs;
  qd.a.moments = moments_of(X, X.n);
  qd.d_r = d_r_values(qd.a);
  qd.r = stratum_index(qd.a);
  return qd;
}

QuotientData quotient_point(const GlNext& Y) {
  QuotientData qd = quotient_point(Y.X);
  qd.a.d = Y.d;
  return qd;
}

bool is_central(const QuotientPoint& a) {
  for (const auto& m : a.moments)
    if (m != 0) return false;
  // charpoly must be (x - lambda)^n.
  int n = a.n();
  if (n == 0) return true;
  Rat lambda = -a.char_coeffs[static_cast<size_t>(n) - 1] / n;
  Poly target = poly_pow(Poly::x() - Poly::constant(lambda), n);
  Poly f;
  f.c = a.char_coeffs;
  f.c.push_back(Rat(1));
  f.normalize();
  return f == target;
}

bool is_regular_semisimple(const QuotientPoint& a) { return stratum_index(a) == a.n(); }

bool is_regular(const TildeGl& X) {
  int n = X.n;
  int vars = n * n;
  // Equations: MA - AM = 0 (n^2), Mv = 0 (n), uM = 0 (n).
  MatQ S(n * n + 2 * n, vars);
  auto idx = [n](int i, int j) { return i * n + j; };
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        S.at(row, idx(i, k)) += X.A.at(k, j);
        S.at(row, idx(k, j)) -= X.A.at(i, k);
      }
      ++row;
    }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) S.at(row, idx(i, k)) = X.v[static_cast<size_t>(k)];
    ++row;
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) S.at(row, idx(k, j)) = X.u[static_cast<size_t>(k)];
    ++row;
  }
  return null_space(S).empty();
}

SInvariants s_invariants(const BaseField& F, const SElement& s) {
  SInvariants inv;
  inv.char_coeffs = et_charpoly(F, s.x);
  int n = s.n;
  MatE pw = s.x;
  for (int i = 1; i <= n; ++i) {
    inv.moments.push_back(pw.at(n, n));
    if (i < n) pw = et_mul(F, pw, s.x);
  }
  return inv;
}

SElement cayley_to_group(const BaseField& F, const CayleyParams& cp, const GlNext& Y) {
  int m = Y.X.n + 1;
  MatE Ym = MatE::from_ratmat(F, Y.full());
  EtaleScalar tinv = et_inv(F, cp.tau);
  MatE tY = et_scale(F, tinv, Ym);
  MatE I = MatE::identity(F, m);
  MatE onePlus = et_add(F, I, tY);
  MatE oneMinus = et_sub(F, I, tY);
  MatE inv;
  try {
    inv = et_inverse(F, oneMinus);
  } catch (const std::domain_error&) {
    throw std::domain_error("outside Cayley chart: 1 - tau^{-1}Y singular");
  }
  MatE x = et_scale(F, et_neg(F, cp.sigma), et_mul(F, onePlus, inv));
  return SElement::make(F, x);
}

GlNext cayley_to_lie(const BaseField& F, const CayleyParams& cp, const SElement& s) {
  int m = s.n + 1;
  MatE I = MatE::identity(F, m);
  MatE sig = et_scale(F, cp.sigma, I);
  MatE diff = et_sub(F, s.x, sig);
  MatE inv;
  try {
    inv = et_inverse(F, diff);
  } catch (const std::domain_error&) {
    throw std::domain_error("outside Cayley chart: x - sigma singular");
  }
  MatE Ye = et_scale(F, cp.tau, et_mul(F, inv, et_add(F, s.x, sig)));
  MatQ Y(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!et_is_rational(F, Ye.at(i, j)))
        throw std::logic_error("Cayley inverse produced a non-rational entry");
      Y.at(i, j) = et_rational_part(F, Ye.at(i, j));
    }
  return GlNext::from_matrix(Y);
}

}  // namespace orbw

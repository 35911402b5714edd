#include "orbw/linalg.hpp"

#include <algorithm>

namespace orbw {

Poly Poly::constant(const Rat& a) {
  Poly f;
  if (a != 0) f.c = {a};
  return f;
}

Poly Poly::x() { return {{Rat(0), Rat(1)}}; }

Poly Poly::monomial(int k, const Rat& a) {
  Poly f;
  if (a == 0) return f;
  f.c.assign(k + 1, Rat(0));
  f.c[k] = a;
  return f;
}

Rat Poly::lead() const { return c.empty() ? Rat(0) : c.back(); }

void Poly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& f, const Poly& g) {
  Poly h;
  h.c.resize(std::max(f.c.size(), g.c.size()), Rat(0));
  for (size_t i = 0; i < h.c.size(); ++i) h.c[i] = f.coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
  h.normalize();
  return h;
}

Poly operator-(const Poly& f, const Poly& g) { return f + Rat(-1) * g; }

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly::zero();
  Poly h;
  h.c.assign(f.c.size() + g.c.size() - 1, Rat(0));
  for (size_t i = 0; i < f.c.size(); ++i)
    for (size_t j = 0; j < g.c.size(); ++j) h.c[i + j] += f.c[i] * g.c[j];
  h.normalize();
  return h;
}

Poly operator*(const Rat& a, const Poly& f) {
  if (a == 0) return Poly::zero();
  Poly h = f;
  for (auto& x : h.c) x *= a;
  return h;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly r = f, q;
  if (f.deg() >= g.deg()) q.c.assign(f.deg() - g.deg() + 1, Rat(0));
  while (!r.is_zero() && r.deg() >= g.deg()) {
    Rat coef = r.lead() / g.lead();
    int shift = r.deg() - g.deg();
    q.c[shift] = coef;
    r = r - coef * (Poly::monomial(shift, Rat(1)) * g);
  }
  q.normalize();
  return {q, r};
}

Poly poly_gcd(Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = poly_divmod(f, g).second;
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return (Rat(1) / f.lead()) * f;
}

Poly poly_pow(const Poly& f, long k) {
  Poly acc = Poly::constant(Rat(1));
  for (long i = 0; i < k; ++i) acc = acc * f;
  return acc;
}

Poly poly_derivative(const Poly& f) {
  Poly g;
  if (f.deg() < 1) return g;
  g.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) g.c[i - 1] = Rat(static_cast<long>(i)) * f.c[i];
  g.normalize();
  return g;
}

int poly_multiplicity(const Poly& f, const Poly& g) {
  if (f.is_zero()) throw std::domain_error("multiplicity in zero polynomial");
  int k = 0;
  Poly r = f;
  while (true) {
    auto [q, rem] = poly_divmod(r, g);
    if (!rem.is_zero()) return k;
    r = q;
    ++k;
  }
}

Poly MonicPoly::poly() const {
  Poly f;
  f.c = cs;
  f.c.push_back(Rat(1));
  f.normalize();
  return f;
}

MonicPoly MonicPoly::from_poly(const Poly& f) {
  if (f.is_zero() || f.lead() != 1) throw std::invalid_argument("polynomial is not monic");
  MonicPoly m;
  m.cs.assign(f.c.begin(), f.c.end() - 1);
  return m;
}

std::vector<Rat> rational_roots(const Poly& f) {
  // Clear denominators, then divisor scan over the integer model.
  if (f.is_zero()) throw std::domain_error("roots of zero polynomial");
  Int lcm = 1;
  for (const auto& c : f.c) lcm = lcm / gcd(lcm, Int(c.get_den())) * Int(c.get_den());
  std::vector<Int> ic;
  for (const auto& c : f.c) ic.push_back(Int(c * Rat(lcm)));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  std::vector<Rat> roots;
  if (ic.empty()) return roots;
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low == ic.size() - 1) return roots;
  Int a0 = abs(ic[low]), an = abs(ic.back());
  std::vector<Int> pdiv, qdiv;
  for (Int d = 1; d * d <= a0; ++d)
    if (a0 % d == 0) {
      pdiv.push_back(d);
      pdiv.push_back(a0 / d);
    }
  for (Int d = 1; d * d <= an; ++d)
    if (an % d == 0) {
      qdiv.push_back(d);
      qdiv.push_back(an / d);
    }
  for (const auto& pn : pdiv)
    for (const auto& qn : qdiv)
      for (int s : {1, -1}) {
        Rat r(s * pn, qn);
        r.canonicalize();
        if (f.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  return roots;
}

bool irreducible_deg_le3(const MonicPoly& f) {
  int d = f.deg();
  if (d < 1 || d > 3) throw std::invalid_argument("irreducibility test limited to degrees 1..3");
  if (d == 1) return true;
  return rational_roots(f.poly()).empty();
}

MatQ MatQ::identity(int n) {
  MatQ I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

MatQ operator+(const MatQ& A, const MatQ& B) {
  MatQ C(A.rows, A.cols);
  for (size_t i = 0; i < C.e.size(); ++i) C.e[i] = A.e[i] + B.e[i];
  return C;
}

MatQ operator-(const MatQ& A, const MatQ& B) {
  MatQ C(A.rows, A.cols);
  for (size_t i = 0; i < C.e.size(); ++i) C.e[i] = A.e[i] - B.e[i];
  return C;
}

MatQ operator*(const MatQ& A, const MatQ& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
  MatQ C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
    }
  return C;
}

MatQ operator*(const Rat& a, const MatQ& A) {
  MatQ C = A;
  for (auto& x : C.e) x *= a;
  return C;
}

MatQ transpose(const MatQ& A) {
  MatQ C(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

Rat det(const MatQ& A) {
  if (A.rows != A.cols) throw std::invalid_argument("det of non-square matrix");
  int n = A.rows;
  if (n == 0) return Rat(1);
  MatQ M = A;
  Rat prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rat(0);
      for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
    prev = M.at(k, k);
  }
  return Rat(sign) * M.at(n - 1, n - 1);
}

MatQ inverse(const MatQ& A) {
  auto ns = solve_linear(A, std::vector<Rat>(A.rows, Rat(0)));
  if (A.rows != A.cols || ns.rank != A.rows) throw std::domain_error("matrix not invertible");
  MatQ inv(A.rows, A.cols);
  for (int j = 0; j < A.cols; ++j) {
    std::vector<Rat> e(A.rows, Rat(0));
    e[j] = 1;
    auto s = solve_linear(A, e);
    for (int i = 0; i < A.rows; ++i) inv.at(i, j) = s.x[i];
  }
  return inv;
}

long min_val(const MatQ& A, const Int& p) {
  long m = VAL_INF;
  for (const auto& x : A.e) m = std::min(m, val_p(x, p));
  return m;
}

bool is_integral(const MatQ& A, const Int& p) { return min_val(A, p) >= 0; }

LinSolve solve_linear(const MatQ& A, const std::vector<Rat>& b) {
  int n = A.rows, m = A.cols;
  MatQ M(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, m) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (M.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j <= m; ++j) std::swap(M.at(row, j), M.at(piv, j));
    Rat lead = M.at(row, col);
    for (int j = 0; j <= m; ++j) M.at(row, j) /= lead;
    for (int i = 0; i < n; ++i) {
      if (i == row || M.at(i, col) == 0) continue;
      Rat f = M.at(i, col);
      for (int j = 0; j <= m; ++j) M.at(i, j) -= f * M.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  LinSolve out;
  out.rank = row;
  out.consistent = true;
  for (int i = row; i < n; ++i)
    if (M.at(i, m) != 0) out.consistent = false;
  if (out.consistent) {
    out.x.assign(m, Rat(0));
    for (int r = 0; r < row; ++r) out.x[pivot_col[r]] = M.at(r, m);
  }
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free_col = 0; free_col < m; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(m, Rat(0));
    v[free_col] = 1;
    for (int r = 0; r < row; ++r) v[pivot_col[r]] = -M.at(r, free_col);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rat>> null_space(const MatQ& A) {
  return solve_linear(A, std::vector<Rat>(A.rows, Rat(0))).kernel;
}

MonicPoly charpoly(const MatQ& A) {
  if (A.rows != A.cols) throw std::invalid_argument("charpoly of non-square matrix");
  int n = A.rows;
  // det(xI - A) at n+1 integer points, then Lagrange interpolation.
  std::vector<Rat> xs, ys;
  for (int k = 0; k <= n; ++k) {
    MatQ M = Rat(k) * MatQ::identity(n) - A;
    xs.push_back(Rat(k));
    ys.push_back(det(M));
  }
  Poly f = Poly::zero();
  for (int i = 0; i <= n; ++i) {
    Poly li = Poly::constant(Rat(1));
    Rat denom(1);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      li = li * (Poly::x() - Poly::constant(xs[j]));
      denom *= xs[i] - xs[j];
    }
    f = f + (ys[i] / denom) * li;
  }
  return MonicPoly::from_poly(f);
}

Rat hankel_det(const std::vector<Rat>& m, int r) {
  if (r == 0) return Rat(1);
  if (static_cast<int>(m.size()) < 2 * r - 1)
    throw std::invalid_argument("moment window too short for Hankel order " + std::to_string(r));
  MatQ H(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) H.at(i, j) = m[static_cast<size_t>(i) + j];
  return det(H);
}

MonicPoly minimal_recurrence(const std::vector<Rat>& m) {
  int half = static_cast<int>(m.size()) / 2;
  int r = 0;
  for (int k = 1; k <= half; ++k)
    if (hankel_det(m, k) != 0) r = k;
  return minimal_recurrence(m, r);
}

MonicPoly minimal_recurrence(const std::vector<Rat>& m, int r) {
  if (r == 0) {
    for (const auto& x : m)
      if (x != 0) throw std::invalid_argument("nonzero moments with Hankel order 0");
    return MonicPoly{};
  }
  if (static_cast<int>(m.size()) < 2 * r)
    throw std::invalid_argument("moment window too short for Hankel order " + std::to_string(r));
  MatQ H(r, r);
  std::vector<Rat> rhs(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) H.at(i, j) = m[static_cast<size_t>(i) + j];
    rhs[i] = -m[static_cast<size_t>(i) + r];
  }
  auto sol = solve_linear(H, rhs);
  if (!sol.consistent || sol.rank < r)
    throw std::invalid_argument("singular Hankel system at order " + std::to_string(r));
  MonicPoly q;
  q.cs = sol.x;
  // The recurrence must hold across the whole window.
  for (size_t i = 0; i + r < m.size(); ++i) {
    Rat acc = m[i + r];
    for (int j = 0; j < r; ++j) acc += q.cs[j] * m[i + j];
    if (acc != 0)
      throw std::invalid_argument("moments violate the order-" + std::to_string(r) + " recurrence");
  }
  return q;
}

MatE MatE::identity(const BaseField& F, int n) {
  MatE I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = EtaleScalar::one(F);
  return I;
}

MatE MatE::from_ratmat(const BaseField& F, const MatQ& A) {
  MatE B(A.rows, A.cols);
  for (size_t i = 0; i < A.e.size(); ++i) B.e[i] = EtaleScalar::from_base(F, A.e[i]);
  return B;
}

MatE et_add(const BaseField& F, const MatE& A, const MatE& B) {
  MatE C(A.rows, A.cols);
  for (size_t i = 0; i < C.e.size(); ++i) C.e[i] = et_add(F, A.e[i], B.e[i]);
  return C;
}

MatE et_sub(const BaseField& F, const MatE& A, const MatE& B) {
  MatE C(A.rows, A.cols);
  for (size_t i = 0; i < C.e.size(); ++i) C.e[i] = et_sub(F, A.e[i], B.e[i]);
  return C;
}

MatE et_mul(const BaseField& F, const MatE& A, const MatE& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
  MatE C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k)
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = et_add(F, C.at(i, j), et_mul(F, A.at(i, k), B.at(k, j)));
  return C;
}

MatE et_scale(const BaseField& F, const EtaleScalar& a, const MatE& A) {
  MatE C = A;
  for (auto& x : C.e) x = et_mul(F, a, x);
  return C;
}

MatE et_conj(const BaseField& F, const MatE& A) {
  MatE C = A;
  for (auto& x : C.e) x = et_conj(F, x);
  return C;
}

MatE et_transpose(const MatE& A) {
  MatE C(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

EtaleScalar et_det(const BaseField& F, const MatE& A) {
  if (A.rows != A.cols) throw std::invalid_argument("det of non-square matrix");
  int n = A.rows;
  if (n == 0) return EtaleScalar::one(F);
  if (n == 1) return A.at(0, 0);
  EtaleScalar acc = EtaleScalar::zero();
  // Cofactor expansion; matrices here are at most 3x3.
  for (int j = 0; j < n; ++j) {
    MatE minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cc++) = A.at(i, k);
      }
    }
    EtaleScalar term = et_mul(F, A.at(0, j), et_det(F, minor));
    if (j % 2 == 1) term = et_neg(F, term);
    acc = et_add(F, acc, term);
  }
  return acc;
}

MatE et_inverse(const BaseField& F, const MatE& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = A.rows;
  MatE M = A;
  MatE I = MatE::identity(F, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (et_invertible(F, M.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix over E not invertible");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(M.at(col, j), M.at(piv, j));
        std::swap(I.at(col, j), I.at(piv, j));
      }
    EtaleScalar inv = et_inv(F, M.at(col, col));
    for (int j = 0; j < n; ++j) {
      M.at(col, j) = et_mul(F, inv, M.at(col, j));
      I.at(col, j) = et_mul(F, inv, I.at(col, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || et_is_zero(M.at(i, col))) continue;
      EtaleScalar f = M.at(i, col);
      for (int j = 0; j < n; ++j) {
        M.at(i, j) = et_sub(F, M.at(i, j), et_mul(F, f, M.at(col, j)));
        I.at(i, j) = et_sub(F, I.at(i, j), et_mul(F, f, I.at(col, j)));
      }
    }
  }
  // Split E can have non-invertible pivots without the matrix being singular
  // componentwise, but S-side usage keeps to invertible cases; verify.
  MatE check = et_mul(F, A, I);
  if (!(check == MatE::identity(F, n))) throw std::domain_error("matrix over E not invertible");
  return I;
}

bool et_mat_integral(const BaseField& F, const MatE& A) {
  for (const auto& x : A.e)
    if (!et_integral(F, x)) return false;
  return true;
}

std::vector<EtaleScalar> et_charpoly(const BaseField& F, const MatE& A) {
  // Faddeev-LeVerrier; exact over E, sizes <= 3.
  int n = A.rows;
  std::vector<EtaleScalar> c(n + 1, EtaleScalar::zero());
  c[n] = EtaleScalar::one(F);
  MatE M = MatE(n, n);
  for (int k = 1; k <= n; ++k) {
    M = et_mul(F, A, M);
    for (int i = 0; i < n; ++i)
      M.at(i, i) = et_add(F, M.at(i, i), c[static_cast<size_t>(n - k + 1)]);
    EtaleScalar tr = EtaleScalar::zero();
    MatE AM = et_mul(F, A, M);
    for (int i = 0; i < n; ++i) tr = et_add(F, tr, AM.at(i, i));
    Rat mk(-1, k);
    mk.canonicalize();
    c[static_cast<size_t>(n - k)] = {mk * tr.a, mk * tr.b};
  }
  c.pop_back();
  return c;
}

}  // namespace orbw

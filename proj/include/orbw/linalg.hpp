#pragma once

#include "orbw/field.hpp"

#include <functional>
#include <vector>

namespace orbw {

// Dense polynomial over Q, coefficients constant-first, no trailing zeros.
struct Poly {
  std::vector<Rat> c;

  static Poly zero() { return {}; }
  static Poly constant(const Rat& a);
  static Poly x();
  static Poly monomial(int k, const Rat& a);

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rat coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rat(0); }
  Rat lead() const;
  void normalize();
  Rat eval(const Rat& x) const;
  bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly operator*(const Rat& a, const Poly& f);
// Exact division with remainder; g != 0.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
Poly poly_gcd(Poly f, Poly g);  // monic gcd
Poly poly_pow(const Poly& f, long k);
Poly poly_derivative(const Poly& f);
// Largest k with g^k | f (g nonconstant).
int poly_multiplicity(const Poly& f, const Poly& g);

// Monic polynomial; cs are the non-leading coefficients, constant first.
struct MonicPoly {
  std::vector<Rat> cs;

  int deg() const { return static_cast<int>(cs.size()); }
  Poly poly() const;
  static MonicPoly from_poly(const Poly& f);  // requires monic input
  Rat eval(const Rat& x) const { return poly().eval(x); }
  bool operator==(const MonicPoly&) const = default;
};

// Rational root test based irreducibility over Q, degrees 1..3 only.
bool irreducible_deg_le3(const MonicPoly& f);
std::vector<Rat> rational_roots(const Poly& f);

// Dense matrix over Q, row-major.
struct MatQ {
  int rows = 0, cols = 0;
  std::vector<Rat> e;

  MatQ() = default;
  MatQ(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, Rat(0)) {}
  static MatQ identity(int n);
  Rat& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const MatQ&) const = default;
};

MatQ operator+(const MatQ& A, const MatQ& B);
MatQ operator-(const MatQ& A, const MatQ& B);
MatQ operator*(const MatQ& A, const MatQ& B);
MatQ operator*(const Rat& a, const MatQ& A);
MatQ transpose(const MatQ& A);
Rat det(const MatQ& A);  // fraction-free (Bareiss) elimination
MatQ inverse(const MatQ& A);
long min_val(const MatQ& A, const Int& p);  // VAL_INF for the zero matrix
bool is_integral(const MatQ& A, const Int& p);

struct LinSolve {
  bool consistent = false;
  std::vector<Rat> x;                      // one solution when consistent
  long rank = 0;
  std::vector<std::vector<Rat>> kernel;    // basis of the solution space of Ax=0
};

LinSolve solve_linear(const MatQ& A, const std::vector<Rat>& b);
std::vector<std::vector<Rat>> null_space(const MatQ& A);

// Characteristic polynomial det(xI - A), monic of degree n; computed from
// n+1 fraction-free determinant evaluations and Lagrange interpolation.
MonicPoly charpoly(const MatQ& A);

Rat hankel_det(const std::vector<Rat>& m, int r);  // det (m_{i+j-2})_{1..r}

// The unique monic Q with m satisfying the order-r linear recurrence given by
// Q, where r is the Hankel rank of the window.  Throws naming the failing
// Hankel order when the window is inconsistent or too short.
MonicPoly minimal_recurrence(const std::vector<Rat>& m);
MonicPoly minimal_recurrence(const std::vector<Rat>& m, int r);

// Matrix over E; all operations take the base field for the ring structure.
struct MatE {
  int rows = 0, cols = 0;
  std::vector<EtaleScalar> e;

  MatE() = default;
  MatE(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, EtaleScalar::zero()) {}
  static MatE identity(const BaseField& F, int n);
  static MatE from_ratmat(const BaseField& F, const MatQ& A);
  EtaleScalar& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const EtaleScalar& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const MatE&) const = default;
};

MatE et_add(const BaseField& F, const MatE& A, const MatE& B);
MatE et_sub(const BaseField& F, const MatE& A, const MatE& B);
MatE et_mul(const BaseField& F, const MatE& A, const MatE& B);
MatE et_scale(const BaseField& F, const EtaleScalar& a, const MatE& A);
MatE et_conj(const BaseField& F, const MatE& A);
MatE et_transpose(const MatE& A);
EtaleScalar et_det(const BaseField& F, const MatE& A);
MatE et_inverse(const BaseField& F, const MatE& A);  // throws if singular
bool et_mat_integral(const BaseField& F, const MatE& A);
std::vector<EtaleScalar> et_charpoly(const BaseField& F, const MatE& A);  // constant-first, monic implied

}  // namespace orbw

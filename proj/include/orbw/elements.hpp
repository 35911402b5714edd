#pragma once

#include "orbw/linalg.hpp"

namespace orbw {

// X = (A, v, u) in tilde-gl_n(F) with the right GL_n action
// (A,v,u).g = (g^{-1}Ag, g^{-1}v, ug).
struct TildeGl {
  int n = 0;
  MatQ A;               // n x n
  std::vector<Rat> v;   // column
  std::vector<Rat> u;   // row

  static TildeGl zero(int n);
  // Z_lambda^{+} (sign > 0) / Z_lambda^{-} (sign < 0) regular representatives.
  static TildeGl central_rep(int n, const Rat& lambda, int sign);
  bool operator==(const TildeGl&) const = default;
};

// Element of gl_{n+1} block-decomposed through gl_{n+1} ~ tilde-gl_n x F.
struct GlNext {
  TildeGl X;
  Rat d;

  MatQ full() const;                 // (n+1) x (n+1) matrix
  static GlNext from_matrix(const MatQ& M);
  bool operator==(const GlNext&) const = default;
};

// x in S(F): (n+1)x(n+1) over E with x x^c = 1, verified on construction.
struct SElement {
  int n = 0;  // size is n+1
  MatE x;

  static SElement make(const BaseField& F, const MatE& x);
};

struct QuotientPoint {
  std::vector<Rat> char_coeffs;  // monic charpoly of A, constant first, length n
  std::vector<Rat> moments;      // u A^i v, 0 <= i < n
  std::optional<Rat> d;          // corner coordinate for gl_{n+1}

  int n() const { return static_cast<int>(char_coeffs.size()); }
  bool operator==(const QuotientPoint&) const = default;
};

struct CayleyParams {
  EtaleScalar tau;    // tau^c = -tau, invertible
  EtaleScalar sigma;  // sigma sigma^c = 1

  static CayleyParams validated(const BaseField& F, const EtaleScalar& tau,
                                const EtaleScalar& sigma);
};

TildeGl act(const TildeGl& X, const MatQ& g);

std::vector<Rat> mat_vec(const MatQ& A, const std::vector<Rat>& v);
std::vector<Rat> vec_mat(const std::vector<Rat>& u, const MatQ& A);
Rat dot(const std::vector<Rat>& u, const std::vector<Rat>& v);

// Krylov matrices: columns v, Av, ..., A^{n-1}v / rows u, uA, ..., uA^{n-1}.
MatQ krylov_cols(const MatQ& A, const std::vector<Rat>& v);
MatQ krylov_rows(const MatQ& A, const std::vector<Rat>& u);

Rat delta_plus(const TildeGl& X);
Rat delta_minus(const TildeGl& X);
Rat delta_plus(const GlNext& Y);
Rat delta_minus(const GlNext& Y);
// Delta^{+-} of x in S via the block decomposition of the (n+1)-matrix.
EtaleScalar Delta_plus(const BaseField& F, const SElement& x);
EtaleScalar Delta_minus(const BaseField& F, const SElement& x);

std::vector<Rat> moments_of(const TildeGl& X, int count);

struct QuotientData {
  QuotientPoint a;
  std::vector<Rat> d_r;  // d_1 .. d_n on the recurrence-extended moments
  int r = 0;             // largest r with d_r != 0 (0 when all moments vanish)
};

QuotientData quotient_point(const TildeGl& X);
QuotientData quotient_point(const GlNext& Y);

// Moment sequence extended to length `len` by the charpoly recurrence.
std::vector<Rat> extend_moments(const QuotientPoint& a, int len);
std::vector<Rat> d_r_values(const QuotientPoint& a);
int stratum_index(const QuotientPoint& a);

bool is_central(const QuotientPoint& a);
bool is_regular_semisimple(const QuotientPoint& a);

// Trivial-infinitesimal-stabilizer test: {M : MA = AM, Mv = 0, uM = 0} = 0.
bool is_regular(const TildeGl& X);

// S-side invariants: charpoly over E plus the corner moments e^t x^i e.
struct SInvariants {
  std::vector<EtaleScalar> char_coeffs;
  std::vector<EtaleScalar> moments;  // e_{n+1}^t x^i e_{n+1}, 1 <= i <= n
};
SInvariants s_invariants(const BaseField& F, const SElement& x);

// Cayley map c_sigma: Y -> -sigma (1 + tau^{-1}Y)(1 - tau^{-1}Y)^{-1} and its
// inverse x -> tau (x - sigma)^{-1} (x + sigma).
SElement cayley_to_group(const BaseField& F, const CayleyParams& cp, const GlNext& Y);
GlNext cayley_to_lie(const BaseField& F, const CayleyParams& cp, const SElement& x);

}  // namespace orbw

#pragma once

#include "orbw/elements.hpp"

namespace orbw {

enum class SpaceKind { tilde_gl, gl_next, vec, u_tilde };

// Flattened coordinate model of the ambient space.  tilde_gl(n) flattens as
// [A row-major | v | u]; gl_next(n) as the full (n+1)^2 matrix; u_tilde is
// the n=1 unitary space F x E with coordinates [a | v.a | v.b] and carries
// the Gram scalar beta of the Hermitian form.
struct Ambient {
  SpaceKind kind = SpaceKind::vec;
  int n = 1;
  Rat beta = 1;  // u_tilde only

  int dim() const;
  // v_p of the block scalar of the invariant pairing, per coordinate.
  std::vector<int> block_scales(const BaseField& F) const;
  bool operator==(const Ambient&) const = default;
};

std::vector<Rat> flatten(const TildeGl& X);
TildeGl unflatten_tilde(int n, const std::vector<Rat>& x);

// One term w * psi(<phase, X>) * 1_{center + L(depths)} with
// L(depths) = { X : v_p(x_i - center_i) >= depths_i }.
struct CosetTerm {
  Rat weight;
  std::vector<Rat> phase;   // empty means no phase
  std::vector<Rat> center;
  std::vector<int> depths;
};

struct LatticeCosetFunction {
  Ambient ambient;
  std::vector<CosetTerm> terms;

  static LatticeCosetFunction zero(const Ambient& amb);
  // 1 on the standard lattice scaled by p^depth.
  static LatticeCosetFunction std_lattice(const Ambient& amb, int depth = 0);
  static LatticeCosetFunction indicator(const Ambient& amb, const std::vector<Rat>& center,
                                        int depth, const Rat& weight = Rat(1));
  bool plain() const;  // no phases
};

// The invariant pairing of the ambient space in flattened coordinates.
Rat pairing(const BaseField& F, const Ambient& amb, const std::vector<Rat>& x,
            const std::vector<Rat>& y);

// Canonical representative of c mod p^m Z_p in [0, p^m), denominators prime to p.
Rat reduce_mod_pm(const Rat& c, const BaseField& F, int m);

void canonicalize(const BaseField& F, LatticeCosetFunction& f);

LatticeCosetFunction lcf_add(const BaseField& F, const LatticeCosetFunction& f,
                             const LatticeCosetFunction& g);
LatticeCosetFunction lcf_scale(const Rat& a, const LatticeCosetFunction& f);

// Exact pointwise value; throws if a phase fails to be rational at x.
Rat evaluate(const BaseField& F, const LatticeCosetFunction& f, const std::vector<Rat>& x);

// Translate: (T_c f)(X) = f(X + c).
LatticeCosetFunction translate(const BaseField& F, const LatticeCosetFunction& f,
                               const std::vector<Rat>& c);
// Reflection f(-X).
LatticeCosetFunction reflect(const BaseField& F, const LatticeCosetFunction& f);

// Right translation R(g)f(X) = f(X.g) on tilde_gl; g must be p-integral with
// p-unit determinant so that cosets map to cosets.
LatticeCosetFunction act_unit(const BaseField& F, const LatticeCosetFunction& f, const MatQ& g);
// R(p^k) for the central scalar p^k on tilde_gl.
LatticeCosetFunction act_scalar_power(const BaseField& F, const LatticeCosetFunction& f, long k);

// Transpose involution theta(A, v, u) = (A^t, u^t, v^t) transported to
// functions: (theta_* f)(X) = f(theta X).
std::vector<Rat> theta_point(const Ambient& amb, const std::vector<Rat>& x);
LatticeCosetFunction theta_transport(const BaseField& F, const LatticeCosetFunction& f);

// Fourier transform with the self-dual measure for the ambient pairing.
LatticeCosetFunction fourier(const BaseField& F, const LatticeCosetFunction& f);

// Total measure of the standard lattice under the self-dual measure.
Rat lambda0_volume(const BaseField& F, const Ambient& amb);

long min_support_val(const LatticeCosetFunction& f, const BaseField& F);
int max_depth(const LatticeCosetFunction& f);

}  // namespace orbw

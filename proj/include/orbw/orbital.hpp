#pragma once

#include "orbw/descent.hpp"
#include "orbw/lfactor.hpp"
#include "orbw/schwartz.hpp"
#include "orbw/tate.hpp"

namespace orbw {

// Central-type input: X = Z_lambda^{sign} . g with rational g in GL_n.
struct CentralElement {
  int n = 1;
  int sign = +1;
  Rat lambda = 0;
  std::optional<MatQ> g;  // identity when absent

  TildeGl element() const;
};

// L-factor attached to a regular element through its descent data and type.
LaurentRational L_for_orbit(const BaseField& F, const UnramifiedCharacter& xi,
                            const DescentData& dd, const std::vector<int>& epsilon);
// Central special case (k = 1, F_1 = Q, n_1 = n).
LaurentRational L_central(const BaseField& F, const UnramifiedCharacter& xi, int n, int sign);

// The K- and nilpotent-averaged reduction f_phi of a central-type orbital
// integral to a product of Tate integrals; output lives on F^n.  n <= 2.
LatticeCosetFunction f_phi(const BaseField& F, const LatticeCosetFunction& phi, const Rat& lambda,
                           const UnramifiedCharacter& xi, int n);

// Tate-product route for central-type elements.
LaurentRational orbital_central(const BaseField& F, const CentralElement& X,
                                const LatticeCosetFunction& phi, const UnramifiedCharacter& xi);

// Fourier/gamma route; must agree with orbital_central identically.
LaurentRational orbital_via_gamma(const BaseField& F, const CentralElement& X,
                                  const LatticeCosetFunction& phi, const UnramifiedCharacter& xi);

// Regular semisimple orbital integral by additive box subdivision over
// gl_n(F); exact, entire in s (finite Laurent output).  Desk scale: n <= 2.
LaurentRational orbital_rs(const BaseField& F, const TildeGl& X, const LatticeCosetFunction& phi,
                           const UnramifiedCharacter& xi);

// Slice-compatible Schwartz data for the general (descent-product) route:
// either the global unit 1_{Lambda_0} or an explicit per-component list.
struct SliceFunction {
  bool global_unit = true;
  // Per-component depth shifts of the standard lattice (components 0..k,
  // component 0 = rs part); only meaningful when !global_unit.
  std::vector<int> component_depths;
  Rat weight = 1;
};

struct GeneralOrbitalResult {
  LaurentRational I;
  LaurentRational L;
  LaurentRational I_normalized;  // I / L
};

GeneralOrbitalResult orbital_general(const BaseField& F, const OrbitRep& rep,
                                     const DescentData& dd, const SliceFunction& phi,
                                     const UnramifiedCharacter& xi);

// Twist rule: I_{X.g}(phi) = (xi eta)(det g)^{-1} t^{-v(det g)} I_X(phi).
LaurentRational twist_factor(const BaseField& F, const UnramifiedCharacter& xi, const MatQ& g);

}  // namespace orbw

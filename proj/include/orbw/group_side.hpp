#pragma once

#include "orbw/oracle.hpp"

namespace orbw {

// gamma = (g1, g2) in G'(F) = GL_1(E) x GL_2(E), n = 1 desk scale.
struct GroupElement {
  EtaleScalar g1;
  MatE g2;
};

// nu(h) = h (h^c)^{-1}; x = nu(g1^{-1} g2) lands in S.
SElement nu_of(const BaseField& F, const GroupElement& gamma);

// Test function on G'(F): w * 1_{U1 x U2} with U1 = c1 (1 + p^k O_E) and
// U2 = C2 + p^k M_2(O_E), constrained inside the units.
struct GroupTestFunction {
  Rat weight = 1;
  EtaleScalar c1;
  MatE C2;
  int depth = 0;  // k = 0 means exactly 1_{G'(O)}

  static GroupTestFunction unit(const BaseField& F);
};

struct GroupPullbackResult {
  LaurentRational L_gamma;
  LaurentRational I_gamma;
  Rat fS_at_x;                 // exact finite integration of f^S_s at x
  bool fS_s_independent;       // support forced h_1 into units
  std::optional<LaurentRational> I_direct;  // rs case: the convergent double integral
};

// The sigma-pullback orbital integral at n = 1 under the unramified
// hypotheses (2 tau sigma a unit, gamma integral, unramified descent data).
GroupPullbackResult group_pullback(const BaseField& F, const GroupTestFunction& f,
                                   const GroupElement& gamma, const CayleyParams& cp,
                                   const UnramifiedCharacter& xi, const EtaleCharacter& mu);

}  // namespace orbw

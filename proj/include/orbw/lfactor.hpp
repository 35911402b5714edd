#pragma once

#include "orbw/field.hpp"
#include "orbw/laurent.hpp"

namespace orbw {

// L(c1*s + c0, chi) for an unramified character chi of the unramified
// extension with residue cardinality q = p^f, as a rational function in
// t = p^{-s}:  (1 - chi(pi) q^{-c0} t^{f*c1})^{-1}.
struct LFactorSpec {
  Rat chi_at_unif = 1;  // chi(uniformizer)
  long s_coeff = 1;     // c1
  Rat s_offset = 0;     // c0, must be an integer
  int residue_deg = 1;  // f
};

LaurentRational build_L(const LFactorSpec& spec, const BaseField& F);

// Value of L(s0, chi) at an integer point, as an exact rational.
Rat L_value(const Rat& chi_at_unif, long s0, const BaseField& F, int residue_deg = 1);

// Central-block L-factors over the residue-degree-f factor field:
//   plus:  prod_{j=1..m} L(-js - j + 1, chi^{-j})
//   minus: prod_{j=1..m} L( js - j + 1, chi^{ j})
// where chi is (xi_i * eta_i) evaluated at the factor-field uniformizer.
LaurentRational L_central_block(int m, const Rat& chi_at_unif, int residue_deg, int sign,
                                const BaseField& F);

// gamma(c1 s + c0, chi) = eps * L(1 - c1 s - c0, chi^{-1}) / L(c1 s + c0, chi),
// with eps = 1 in the unramified configuration.
LaurentRational gamma_factor(const Rat& chi_at_unif, long c1, const Rat& c0, const BaseField& F,
                             int residue_deg = 1);

// gamma^{+}_xi(s) = prod_{i=1..n} gamma(-is - i + 1, (xi eta)^{-i}), and the
// minus counterpart with (i, +s) exponents.
LaurentRational gamma_pm(int n, const Rat& xieta_at_p, int sign, const BaseField& F);

// zeta_F(1) ... zeta_F(n) as an exact rational.
Rat zeta_n(const BaseField& F, int n);

}  // namespace orbw

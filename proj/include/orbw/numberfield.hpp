#pragma once

#include "orbw/linalg.hpp"

#include <memory>

namespace orbw {

// F' = Q[x]/(P) for monic irreducible P; stands in for the unramified local
// extension of residue degree deg P when P stays irreducible mod p.
struct NumberField {
  MonicPoly P;

  int deg() const { return P.deg(); }
  bool operator==(const NumberField&) const = default;
};

// Residue degree bookkeeping: requires P irreducible mod p and p coprime to
// disc P (checked through the mod-p factor pattern); throws otherwise.
void check_unramified(const NumberField& K, const Int& p);
bool irreducible_mod_p(const MonicPoly& P, const Int& p);

struct NFElem {
  NumberField K;
  Poly rep;  // degree < deg P

  static NFElem from_rat(const NumberField& K, const Rat& a);
  static NFElem generator(const NumberField& K);  // the class of x
  bool is_zero() const { return rep.is_zero(); }
  bool operator==(const NFElem&) const = default;
};

NFElem nf_add(const NFElem& x, const NFElem& y);
NFElem nf_sub(const NFElem& x, const NFElem& y);
NFElem nf_mul(const NFElem& x, const NFElem& y);
NFElem nf_scale(const Rat& a, const NFElem& x);
NFElem nf_inv(const NFElem& x);
Rat nf_trace(const NFElem& x);
Rat nf_norm(const NFElem& x);
// Valuation on the unramified extension above p (v(uniformizer) = 1).
long nf_val(const NFElem& x, const Int& p);
// Multiplication-by-x matrix in the power basis.
MatQ nf_mult_matrix(const NFElem& x);
// Gram matrix of the trace form on the power basis.
MatQ trace_form(const NumberField& K);

}  // namespace orbw

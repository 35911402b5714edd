#pragma once

#include "orbw/rational.hpp"

namespace orbw {

enum class EtaleType { split, inert };

// The local base field F = Q_p modelled exactly on Q with a designated odd
// prime, together with the quadratic etale algebra E/F.  Inert E is realized
// as Q(sqrt(d)) with d the smallest positive non-residue mod p, so that all
// identities in scope are exact algebraic statements.
struct BaseField {
  Int p;
  EtaleType etale = EtaleType::inert;
  Int d = 0;  // the chosen non-square unit, inert case only

  static BaseField make(const Int& p, EtaleType etale);

  bool inert() const { return etale == EtaleType::inert; }

  long val(const Rat& x) const { return val_p(x, p); }

  // eta, the quadratic character attached to E/F: (-1)^{v_p} when inert.
  Rat eta(const Rat& x) const;
  int eta_at_p() const { return inert() ? -1 : 1; }
};

// Element of E = F x F (split) or F(sqrt d) (inert).  Stored as a pair of
// rationals either way; the ring structure differs.
struct EtaleScalar {
  Rat a, b;

  static EtaleScalar from_base(const BaseField& F, const Rat& x);
  static EtaleScalar zero() { return {Rat(0), Rat(0)}; }
  static EtaleScalar one(const BaseField& F);

  bool operator==(const EtaleScalar&) const = default;
};

EtaleScalar et_add(const BaseField& F, const EtaleScalar& x, const EtaleScalar& y);
EtaleScalar et_sub(const BaseField& F, const EtaleScalar& x, const EtaleScalar& y);
EtaleScalar et_neg(const BaseField& F, const EtaleScalar& x);
EtaleScalar et_mul(const BaseField& F, const EtaleScalar& x, const EtaleScalar& y);
EtaleScalar et_conj(const BaseField& F, const EtaleScalar& x);
Rat et_norm(const BaseField& F, const EtaleScalar& x);
Rat et_trace(const BaseField& F, const EtaleScalar& x);
bool et_is_zero(const EtaleScalar& x);
bool et_invertible(const BaseField& F, const EtaleScalar& x);
EtaleScalar et_inv(const BaseField& F, const EtaleScalar& x);
bool et_is_rational(const BaseField& F, const EtaleScalar& x);
Rat et_rational_part(const BaseField& F, const EtaleScalar& x);

// min of the two coordinate valuations; this is the valuation of x in O_E
// for inert E (d a unit) and the min of the component valuations when split.
long et_val(const BaseField& F, const EtaleScalar& x);
bool et_integral(const BaseField& F, const EtaleScalar& x);

// Unramified multiplicative character of F^x, determined by its value at p.
struct UnramifiedCharacter {
  Rat at_p = 1;

  Rat eval(const BaseField& F, const Rat& x) const;
  UnramifiedCharacter pow(long k) const { return {pow_rat(at_p, k)}; }
  UnramifiedCharacter times(const UnramifiedCharacter& o) const { return {at_p * o.at_p}; }
  UnramifiedCharacter inverse() const { return {Rat(1) / at_p}; }
};

// Unramified character of E^x restricting to eta on F^x.  Inert: single value
// at the uniformizer (forced to -1).  Split: values (m, 1/m) at (p,1), (1,p).
struct EtaleCharacter {
  Rat at_p1 = 1;  // inert: value at p; split: value at (p,1)
  Rat at_p2 = 1;  // split only: value at (1,p)

  static EtaleCharacter validated(const BaseField& F, const Rat& m);
  Rat eval(const BaseField& F, const EtaleScalar& x) const;
};

}  // namespace orbw

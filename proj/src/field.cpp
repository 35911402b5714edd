#include "orbw/field.hpp"

namespace orbw {

BaseField BaseField::make(const Int& p, EtaleType etale) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported (unramified setting requires odd p)");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  BaseField F;
  F.p = p;
  F.etale = etale;
  if (etale == EtaleType::inert) F.d = smallest_nonresidue(p);
  return F;
}

Rat BaseField::eta(const Rat& x) const {
  if (x == 0) throw std::domain_error("character undefined at zero");
  if (!inert()) return Rat(1);
  return (val(x) % 2 == 0) ? Rat(1) : Rat(-1);
}

EtaleScalar EtaleScalar::one(const BaseField& F) {
  if (F.inert()) return {Rat(1), Rat(0)};
  return {Rat(1), Rat(1)};
}

EtaleScalar EtaleScalar::from_base(const BaseField& F, const Rat& x) {
  if (F.inert()) return {x, Rat(0)};
  return {x, x};
}

EtaleScalar et_add(const BaseField&, const EtaleScalar& x, const EtaleScalar& y) {
  return {x.a + y.a, x.b + y.b};
}

EtaleScalar et_sub(const BaseField&, const EtaleScalar& x, const EtaleScalar& y) {
  return {x.a - y.a, x.b - y.b};
}

EtaleScalar et_neg(const BaseField&, const EtaleScalar& x) { return {-x.a, -x.b}; }

EtaleScalar et_mul(const BaseField& F, const EtaleScalar& x, const EtaleScalar& y) {
  if (F.inert()) return {x.a * y.a + Rat(F.d) * x.b * y.b, x.a * y.b + x.b * y.a};
  return {x.a * y.a, x.b * y.b};
}

EtaleScalar et_conj(const BaseField& F, const EtaleScalar& x) {
  if (F.inert()) return {x.a, -x.b};
  return {x.b, x.a};
}

Rat et_norm(const BaseField& F, const EtaleScalar& x) {
  if (F.inert()) return x.a * x.a - Rat(F.d) * x.b * x.b;
  return x.a * x.b;
}

Rat et_trace(const BaseField& F, const EtaleScalar& x) {
  if (F.inert()) return 2 * x.a;
  return x.a + x.b;
}

bool et_is_zero(const EtaleScalar& x) { return x.a == 0 && x.b == 0; }

bool et_invertible(const BaseField& F, const EtaleScalar& x) {
  if (F.inert()) return !et_is_zero(x);
  return x.a != 0 && x.b != 0;
}

EtaleScalar et_inv(const BaseField& F, const EtaleScalar& x) {
  if (!et_invertible(F, x)) {
    if (F.inert()) throw std::domain_error("inversion of zero in E");
    throw std::domain_error(std::string("zero divisor in split E: component ") +
                            (x.a == 0 ? "1" : "2") + " vanishes");
  }
  if (F.inert()) {
    Rat n = et_norm(F, x);
    return {x.a / n, -x.b / n};
  }
  return {Rat(1) / x.a, Rat(1) / x.b};
}

bool et_is_rational(const BaseField& F, const EtaleScalar& x) {
  if (F.inert()) return x.b == 0;
  return x.a == x.b;
}

Rat et_rational_part(const BaseField& F, const EtaleScalar& x) {
  if (!et_is_rational(F, x)) throw std::domain_error("scalar not in the base field");
  return x.a;
}

long et_val(const BaseField& F, const EtaleScalar& x) {
  return std::min(val_p(x.a, F.p), val_p(x.b, F.p));
}

bool et_integral(const BaseField& F, const EtaleScalar& x) { return et_val(F, x) >= 0; }

Rat UnramifiedCharacter::eval(const BaseField& F, const Rat& x) const {
  if (x == 0) throw std::domain_error("character undefined at zero");
  return pow_rat(at_p, F.val(x));
}

EtaleCharacter EtaleCharacter::validated(const BaseField& F, const Rat& m) {
  if (m == 0) throw std::invalid_argument("mu must be nonzero");
  if (F.inert()) {
    if (m != -1)
      throw std::invalid_argument("inert mu must restrict to eta on F^x, forcing value -1 at p");
    return {m, m};
  }
  return {m, Rat(1) / m};
}

Rat EtaleCharacter::eval(const BaseField& F, const EtaleScalar& x) const {
  if (F.inert()) {
    if (et_is_zero(x)) throw std::domain_error("character undefined at zero");
    long v = val_p(et_norm(F, x), F.p) / 2;
    return pow_rat(at_p1, v);
  }
  if (x.a == 0 || x.b == 0) throw std::domain_error("character undefined on zero divisor");
  return pow_rat(at_p1, val_p(x.a, F.p)) * pow_rat(at_p2, val_p(x.b, F.p));
}

}  // namespace orbw

#pragma once

#include "orbw/linalg.hpp"

#include <map>

namespace orbw {

// Laurent polynomial in t with rational coefficients.
struct LaurentPoly {
  std::map<long, Rat> c;  // exponent -> coefficient, no zero entries

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(const Rat& a);
  static LaurentPoly term(long e, const Rat& a);

  bool is_zero() const { return c.empty(); }
  Rat coeff(long e) const;
  long min_exp() const;
  long max_exp() const;
  void set(long e, const Rat& a);
  bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly operator*(const Rat& a, const LaurentPoly& f);
LaurentPoly lp_shift(const LaurentPoly& f, long k);        // * t^k
LaurentPoly lp_invert_t(const LaurentPoly& f);             // t -> 1/t

// Exact rational function in t = p^{-s}.  Canonical form: num is a Laurent
// polynomial, den an ordinary polynomial with den(0) != 0, monic, and
// gcd(num-polynomial-part, den) = 1.  Equality is representation equality.
struct LaurentRational {
  LaurentPoly num;
  Poly den;  // den(0) != 0, monic

  static LaurentRational zero();
  static LaurentRational constant(const Rat& a);
  static LaurentRational term(long e, const Rat& a);  // a * t^e
  static LaurentRational make(const LaurentPoly& num, const LaurentPoly& den);

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const LaurentRational&) const = default;
};

LaurentRational operator+(const LaurentRational& f, const LaurentRational& g);
LaurentRational operator-(const LaurentRational& f, const LaurentRational& g);
LaurentRational operator*(const LaurentRational& f, const LaurentRational& g);
LaurentRational operator*(const Rat& a, const LaurentRational& f);
LaurentRational lr_inverse(const LaurentRational& f);
LaurentRational lr_subst_t_inverse(const LaurentRational& f);  // t -> 1/t

// sum_{j>=0} (a t^e)^j = 1/(1 - a t^e); e != 0 required.
LaurentRational geometric_series(const Rat& a, long e);

struct HoloResult {
  long order = 0;  // pole order if > 0, vanishing order if < 0
  Rat value;       // set when order <= 0 (value is 0 when order < 0)
};

// Pole/zero order and exact value of R at t = p^{-s0}, integer s0.
HoloResult holo_at(const LaurentRational& R, const Int& p, long s0);

// Laurent series coefficients of R for exponents in [lo, hi]; around t = 0
// when at_zero, around t = infinity otherwise.
std::map<long, Rat> series_window(const LaurentRational& R, long lo, long hi, bool at_zero);

}  // namespace orbw

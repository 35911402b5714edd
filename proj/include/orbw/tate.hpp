#pragma once

#include "orbw/field.hpp"
#include "orbw/laurent.hpp"
#include "orbw/schwartz.hpp"

namespace orbw {

// One-dimensional coset c + p^m O with an optional additive phase psi(c* b).
struct Coset1D {
  Rat center = 0;
  int depth = 0;
  Rat phase = 0;  // 0 = no phase
};

// Intersection of 1-dimensional cosets; nullopt when empty.
std::optional<Coset1D> intersect(const BaseField& F, const Coset1D& a, const Coset1D& b);

// integral over F^x of 1_{c+p^m O}(b) psi(c* b) chi(b) |b|^{e s + c0} d^x b,
// with vol(O^x) = 1, chi unramified with value chi_p at p, c0 integral, e != 0.
LaurentRational tate_mult_integral(const BaseField& F, const Coset1D& coset, const Rat& chi_p,
                                   long e, long c0);

// integral over F of 1_{c+p^m O}(b) psi(c* b) chi(b) |b|^{e s + c0} db
// (additive measure, vol(O) = 1); the zero point contributes nothing.
LaurentRational tate_add_integral(const BaseField& F, const Coset1D& coset, const Rat& chi_p,
                                  long e, long c0);

// Plain additive integral of psi(c* b) over the coset.
Rat additive_phase_integral(const BaseField& F, const Coset1D& coset);

// Product Tate integral of a coset function on vec(n):
//   integral f(b) prod_i chi_i(b_i) |b_i|^{e_i s + c0_i} d^x b_i.
LaurentRational tate_integral_vec(const BaseField& F, const LatticeCosetFunction& f,
                                  const std::vector<Rat>& chi_p, const std::vector<long>& e,
                                  const std::vector<long>& c0);

}  // namespace orbw

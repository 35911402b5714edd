#include "orbw/tate.hpp"

namespace orbw {

std::optional<Coset1D> intersect(const BaseField& F, const Coset1D& a, const Coset1D& b) {
  if (a.phase != 0 || b.phase != 0) throw std::invalid_argument("phase in coset intersection");
  const Coset1D& deep = a.depth >= b.depth ? a : b;
  int shallow = std::min(a.depth, b.depth);
  if (F.val(a.center - b.center) < shallow) return std::nullopt;
  Coset1D out;
  out.center = deep.center;
  out.depth = std::max(a.depth, b.depth);
  return out;
}

namespace {

// psi-weighted multiplicative mass of { v(b) = j } within the coset; the
// result is rational (irrational root-of-unity configurations throw).
Rat shell_mass_mult(const BaseField& F, const Coset1D& c, long j) {
  long vc = F.val(c.center);
  Rat zeta1 = Rat(1) / (Rat(1) - Rat(1) / Rat(F.p));
  if (vc < c.depth) {
    // Single-shell coset at level vc.
    if (j != vc) return Rat(0);
    if (c.phase != 0) {
      long vp = F.val(c.phase);
      if (vp + c.depth < 0) return Rat(0);
      if (F.val(c.phase * c.center) < 0)
        throw std::domain_error("phase evaluates to an irrational root of unity");
    }
    return zeta1 * pow_p(F.p, j - c.depth);
  }
  // Coset is the full lattice p^m O.
  if (j < c.depth) return Rat(0);
  if (c.phase == 0) return Rat(1);
  long w = F.val(c.phase) + j;
  if (w >= 0) return Rat(1);
  if (w == -1) return Rat(-1) / Rat(F.p - 1);
  return Rat(0);
}

Rat shell_mass_add(const BaseField& F, const Coset1D& c, long j) {
  long vc = F.val(c.center);
  if (vc < c.depth) {
    if (j != vc) return Rat(0);
    if (c.phase != 0) {
      long vp = F.val(c.phase);
      if (vp + c.depth < 0) return Rat(0);
      if (F.val(c.phase * c.center) < 0)
        throw std::domain_error("phase evaluates to an irrational root of unity");
    }
    return pow_p(F.p, -c.depth);
  }
  if (j < c.depth) return Rat(0);
  if (c.phase == 0) return pow_p(F.p, -j) * (Rat(1) - Rat(1) / Rat(F.p));
  long w = F.val(c.phase) + j;
  if (w >= 0) return pow_p(F.p, -j) * (Rat(1) - Rat(1) / Rat(F.p));
  if (w == -1) return -pow_p(F.p, -j - 1);
  return Rat(0);
}

LaurentRational sum_shells(const BaseField& F, const Coset1D& coset, const Rat& chi_p, long e,
                           long c0, bool additive) {
  if (e == 0) throw std::invalid_argument("s-coefficient must be nonzero");
  long vc = F.val(coset.center);
  auto q_at = [&](long j) {
    return pow_rat(chi_p, j) * LaurentRational::term(e * j, pow_p(F.p, -c0 * j));
  };
  if (vc < coset.depth) {
    Rat m = additive ? shell_mass_add(F, coset, vc) : shell_mass_mult(F, coset, vc);
    return m * q_at(vc);
  }
  // Full lattice: explicit shells up to the stabilization level, then a
  // geometric tail.  The additive masses carry an extra p^{-j} per shell.
  long start = coset.depth;
  long stable = coset.phase == 0 ? start : std::max(start, -F.val(coset.phase));
  LaurentRational acc = LaurentRational::zero();
  for (long j = start; j < stable; ++j) {
    Rat m = additive ? shell_mass_add(F, coset, j) : shell_mass_mult(F, coset, j);
    if (m != 0) acc = acc + m * q_at(j);
  }
  // j >= stable: mass is (1 - 1/p) p^{-j} (additive) or 1 (multiplicative).
  Rat ratio_scalar = chi_p * pow_p(F.p, -c0 - (additive ? 1 : 0));
  LaurentRational tail = geometric_series(ratio_scalar, e);
  Rat head_mass = additive ? (Rat(1) - Rat(1) / Rat(F.p)) : Rat(1);
  LaurentRational head =
      head_mass * pow_rat(chi_p, stable) *
      LaurentRational::term(e * stable, pow_p(F.p, (-c0 - (additive ? 1 : 0)) * stable));
  return acc + head * tail;
}

}  // namespace

LaurentRational tate_mult_integral(const BaseField& F, const Coset1D& coset, const Rat& chi_p,
                                   long e, long c0) {
  return sum_shells(F, coset, chi_p, e, c0, false);
}

LaurentRational tate_add_integral(const BaseField& F, const Coset1D& coset, const Rat& chi_p,
                                  long e, long c0) {
  return sum_shells(F, coset, chi_p, e, c0, true);
}

Rat additive_phase_integral(const BaseField& F, const Coset1D& coset) {
  if (coset.phase == 0) return pow_p(F.p, -coset.depth);
  long vp = F.val(coset.phase);
  if (vp + coset.depth < 0) return Rat(0);
  if (coset.center != 0 && F.val(coset.phase * coset.center) < 0)
    throw std::domain_error("phase evaluates to an irrational root of unity");
  return pow_p(F.p, -coset.depth);
}

LaurentRational tate_integral_vec(const BaseField& F, const LatticeCosetFunction& f,
                                  const std::vector<Rat>& chi_p, const std::vector<long>& e,
                                  const std::vector<long>& c0) {
  if (f.ambient.kind != SpaceKind::vec) throw std::invalid_argument("vector ambient required");
  int n = f.ambient.n;
  LaurentRational acc = LaurentRational::zero();
  for (const auto& t : f.terms) {
    LaurentRational prod = LaurentRational::constant(t.weight);
    for (int i = 0; i < n; ++i) {
      Coset1D c;
      c.center = t.center[static_cast<size_t>(i)];
      c.depth = t.depths[static_cast<size_t>(i)];
      c.phase = t.phase.empty() ? Rat(0) : t.phase[static_cast<size_t>(i)];
      prod = prod * tate_mult_integral(F, c, chi_p[static_cast<size_t>(i)], e[static_cast<size_t>(i)],
                                       c0[static_cast<size_t>(i)]);
      if (prod.is_zero()) break;
    }
    acc = acc + prod;
  }
  return acc;
}

}  // namespace orbw

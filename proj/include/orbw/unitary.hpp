#pragma once

#include "orbw/group_side.hpp"

namespace orbw {

// Isometry class of an n-dimensional E/F Hermitian space; split E has one
// class per dimension, inert E two, separated by disc in F^x / Nm E^x.
struct HermitianClass {
  int dim = 1;
  bool disc_norm = true;      // disc a norm (unit valuation parity)
  int residue_deg = 1;        // of the ground field F_i / F
  Rat gram_last = 1;          // diagonal Gram: (1,...,1,gram_last)
};

std::vector<HermitianClass> hermitian_classes(const BaseField& F, int dim, int residue_deg = 1);

// X^V = (a, v) in tilde-u^V(F) at n = 1: a in F, v in E, moment beta Nm(v).
struct UTildeElement {
  Rat a;
  EtaleScalar v;
  Rat beta;  // Gram scalar of the 1-dimensional form

  Rat moment(const BaseField& F) const { return beta * et_norm(F, v); }
};

// Norm class of d_n(X) = delta^+ delta^-; the disc class of the matching V.
bool matching_disc_is_norm(const BaseField& F, const TildeGl& X);

struct SemisimpleOrbitTag {
  bool h0_norm = true;                 // class of the rs part (ignored when r = 0)
  std::vector<bool> factor_norm;       // one bit per descent factor (inert factors)
  std::vector<bool> factor_has_choice; // whether the factor has two classes
  bool assembled_norm = true;          // class of the orthogonal sum
};

struct SemisimpleOrbits {
  std::vector<SemisimpleOrbitTag> orbits;
  int count_norm_V = 0;    // orbits assembling to the norm-disc V
  int count_other_V = 0;
};

SemisimpleOrbits semisimple_orbits(const BaseField& F, const QuotientPoint& a,
                                   const DescentData& dd);

struct TransferConstants {
  Rat c_plus = 1;     // c_V^+ for the requested space
  Rat c_minus = 1;    // c_V^- = c_V^+ eta(disc V)
  Rat c_iota = 1;     // the sign c^+ of the slice comparison
  Rat c_X = 1;        // c^+ eta(g) omega^+(X_{0,H})
  std::vector<Rat> c_orbit;  // c_{X,o} per semisimple orbit tag
};

// epsilon-factor inputs are forced to 1 in unramified mode; supplied_eps
// overrides them entry-wise otherwise.
TransferConstants transfer_constants(const BaseField& F, const DescentData& dd,
                                     const std::vector<int>& epsilon,
                                     const SemisimpleOrbits& orbits, bool unramified = true,
                                     const std::optional<std::vector<Rat>>& supplied_eps = {});

// c_V^{+-} for a single n'-dimensional space over the residue-degree-f field.
Rat c_space(const BaseField& F, int dim, bool disc_norm, int residue_deg, int sign);

// Exact volume of U(V)(O) at n = 1 via stabilized congruence sums; the raw
// densities at depths 1..3 are reported for auditability.
struct UnitaryVolume {
  Rat volume;
  std::vector<Rat> raw_densities;
};
UnitaryVolume unitary_volume_n1(const BaseField& F, const Rat& beta);

// J_X(phi^V) at n = 1: central orbits evaluate the function, regular
// semisimple orbits integrate over the norm-one torus (inert) or F^x (split).
Rat unitary_orbital_n1(const BaseField& F, const UTildeElement& X,
                       const LatticeCosetFunction& phiV);

// The n = 1 matched-pair verification grid and the singular-transfer ledger.
struct TransferCheckEntry {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct TransferCheckReport {
  bool matched = false;         // pair verified matched-plus on the rs grid
  std::vector<TransferCheckEntry> entries;
  bool all_pass() const;
};

// phi on tilde-gl_1; phiV[0] on the unit-disc space, phiV[1] on the other
// (inert only).  depth: exhaustive rs grid depth.
TransferCheckReport singular_transfer_check(const BaseField& F, const LatticeCosetFunction& phi,
                                            const std::vector<LatticeCosetFunction>& phiV,
                                            int depth);

// eta-twisted rs orbital integral at s = 0 on the GL side at n = 1.
Rat rs_orbital_value_n1(const BaseField& F, const LatticeCosetFunction& phi, const Rat& a,
                        const Rat& m);

}  // namespace orbw

#pragma once

#include "orbw/elements.hpp"
#include "orbw/numberfield.hpp"

namespace orbw {

struct DescentFactor {
  MonicPoly P;   // irreducible over Q
  int mult = 1;  // n_i
  NumberField K() const { return NumberField{P}; }
  int deg() const { return P.deg(); }
};

struct DescentData {
  int r = 0;
  QuotientPoint a0;    // rank-r regular semisimple part (empty when r = 0)
  MonicPoly residual;  // charpoly of the off-rank part a^0
  std::vector<DescentFactor> factors;

  int k() const { return static_cast<int>(factors.size()); }
};

struct StratifyResult {
  int r = 0;
  QuotientPoint a0;
  MonicPoly residual;
};

StratifyResult stratify(const QuotientPoint& a);

// Factorization certificates are lists of (P_i, n_i); degrees <= 3 are
// verified irreducible, higher degrees are accepted as certified.
DescentData descend(const QuotientPoint& a, const std::vector<DescentFactor>& factorization);

// Factor a monic polynomial within the supported desk-scale patterns
// (rational roots, an irreducible remainder of degree <= 3, or the square of
// an irreducible quadratic).  Throws when a certificate is required.
std::vector<DescentFactor> factor_supported(const MonicPoly& f);

DescentData descend_auto(const QuotientPoint& a);

struct OrbitRep {
  std::vector<int> epsilon;  // +1 / -1 per factor
  TildeGl X;
  TildeGl X0;                // slice rs component (r x r), provenance
  std::string slice_desc;
};

// Companion-matrix realization of a regular semisimple quotient point.
TildeGl realize_rs(const QuotientPoint& a0);

// The embedding iota_h applied to (X0, Z^{eps_1}_{alpha_1}, ..., Z^{eps_k}_{alpha_k}).
TildeGl assemble_rep(const DescentData& dd, const TildeGl& X0, const std::vector<int>& epsilon);
// Same slice element assembled over a permuted power basis; used by the
// basis-independence checks.
TildeGl assemble_rep_alt(const DescentData& dd, const TildeGl& X0, const std::vector<int>& epsilon);

std::vector<OrbitRep> orbit_representatives(const QuotientPoint& a, const DescentData& dd);

std::vector<int> classify_type(const TildeGl& X, const DescentData& dd);

}  // namespace orbw

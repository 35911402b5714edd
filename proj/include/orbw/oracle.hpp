#pragma once

#include "orbw/orbital.hpp"

namespace orbw {

struct OracleOptions {
  int window = 6;    // torus valuation window [-M, M]^n
  int depth_cap = 8; // cap on adaptive congruence/subdivision depths
};

// Exact Iwasawa-cell evaluation of I_X(phi, xi, s).  n = 1 supports any
// regular X; n = 2 supports Z_lambda^{+-} (geometric tails) and regular
// semisimple X (finite support).  Throws "window insufficient" when a tail
// cannot be certified inside the window.
LaurentRational oracle_integrate(const BaseField& F, const TildeGl& X,
                                 const LatticeCosetFunction& phi, const UnramifiedCharacter& xi,
                                 const OracleOptions& opt = {});

// Truncated Laurent data: coefficients of t^w for w in [lo, hi], summing
// cells with v(det) = w.  Requires delta^+ != 0 or delta^- != 0 at n = 2.
std::map<long, Rat> oracle_series(const BaseField& F, const TildeGl& X,
                                  const LatticeCosetFunction& phi, const UnramifiedCharacter& xi,
                                  long lo, long hi, const OracleOptions& opt = {});

}  // namespace orbw

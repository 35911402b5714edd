#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbw {

using Rat = mpq_class;
using Int = mpz_class;

// Sentinel for v_p(0); larger than any valuation that can occur at desk scale.
inline constexpr long VAL_INF = std::numeric_limits<long>::max() / 4;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& x);

// v_p of a nonzero integer.
long val_p(const Int& n, const Int& p);

// v_p of a rational, VAL_INF on zero.
long val_p(const Rat& x, const Int& p);

bool is_prime(const Int& n);

// p^k for k of either sign.
Rat pow_p(const Int& p, long k);

Rat pow_rat(const Rat& x, long k);

// x * p^{-v_p(x)}, the unit part of x.
Rat unit_part(const Rat& x, const Int& p);

// Smallest positive quadratic non-residue mod an odd prime.
Int smallest_nonresidue(const Int& p);

bool is_square_mod_p(const Int& a, const Int& p);

// Square root of a mod p^k (a a unit square mod p), via Hensel lifting.
std::optional<Int> sqrt_mod_pk(const Int& a, const Int& p, int k);

Int mod_pow(Int base, Int exp, const Int& mod);
Int mod_inverse(const Int& a, const Int& m);

// Deterministic PRNG (xorshift-style) for seeded property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next();
  // Uniform in [lo, hi].
  long uniform(long lo, long hi);
  // Random rational with numerator in [-m, m], denominator a p-power <= p^d times a unit in [1, m].
  Rat rat(long m = 9);
  Rat nonzero_rat(long m = 9);

 private:
  std::uint64_t state_;
};

}  // namespace orbw

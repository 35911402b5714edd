#include "orbw/rational.hpp"

namespace orbw {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  x.canonicalize();
  return x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

long val_p(const Int& n, const Int& p) {
  if (n == 0) return VAL_INF;
  Int m = abs(n);
  long v = 0;
  Int q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

long val_p(const Rat& x, const Int& p) {
  if (x == 0) return VAL_INF;
  return val_p(Int(x.get_num()), p) - val_p(Int(x.get_den()), p);
}

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

Rat pow_p(const Int& p, long k) {
  Int num = 1;
  mpz_pow_ui(num.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k >= 0 ? k : -k));
  if (k >= 0) return Rat(num);
  return Rat(1) / Rat(num);
}

Rat pow_rat(const Rat& x, long k) {
  if (k == 0) return Rat(1);
  if (x == 0) {
    if (k < 0) throw std::domain_error("0^negative");
    return Rat(0);
  }
  Rat base = k > 0 ? x : Rat(1) / x;
  unsigned long e = static_cast<unsigned long>(k > 0 ? k : -k);
  Rat acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rat unit_part(const Rat& x, const Int& p) {
  if (x == 0) throw std::domain_error("unit_part of zero");
  return x / pow_p(p, val_p(x, p));
}

bool is_square_mod_p(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return true;
  return mod_pow(r, (p - 1) / 2, p) == 1;
}

Int smallest_nonresidue(const Int& p) {
  for (Int d = 2; d < p; ++d) {
    if (!is_square_mod_p(d, p)) return d;
  }
  throw std::logic_error("no nonresidue found; p must be an odd prime");
}

Int mod_pow(Int base, Int exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("not invertible mod m");
  return r;
}

std::optional<Int> sqrt_mod_pk(const Int& a, const Int& p, int k) {
  Int amodp = a % p;
  if (amodp < 0) amodp += p;
  if (amodp == 0 || !is_square_mod_p(amodp, p)) return std::nullopt;
  // Tonelli-Shanks is overkill at desk primes; scan mod p, then Hensel-lift.
  Int x = 0;
  for (Int c = 1; c < p; ++c) {
    if ((c * c - amodp) % p == 0) {
      x = c;
      break;
    }
  }
  Int pk = p;
  for (int i = 1; i < k; ++i) {
    pk *= p;
    Int f = (x * x - a) % pk;
    if (f < 0) f += pk;
    Int inv2x = mod_inverse(2 * x % pk, pk);
    x = (x - f * inv2x) % pk;
    if (x < 0) x += pk;
  }
  return x;
}

std::uint64_t Rng::next() {
  state_ ^= state_ << 13;
  state_ ^= state_ >> 7;
  state_ ^= state_ << 17;
  return state_;
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("bad range");
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Rng::rat(long m) {
  long num = uniform(-m, m);
  long den = uniform(1, m);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat Rng::nonzero_rat(long m) {
  Rat x = rat(m);
  while (x == 0) x = rat(m);
  return x;
}

}  // namespace orbw

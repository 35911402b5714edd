#include "orbw/field.hpp"

#include <doctest.h>

using namespace orbw;

TEST_CASE("valuation basics") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  CHECK(F.val(Rat(1)) == 0);
  CHECK(F.val(Rat(50)) == 2);  // 50 = 2 * 5^2
  CHECK(F.val(Rat(3) / Rat(25)) == -2);
  CHECK(val_p(Rat(0), Int(5)) == VAL_INF);
}

TEST_CASE("valuation is additive and ultrametric") {
  BaseField F = BaseField::make(Int(3), EtaleType::inert);
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    Rat x = rng.nonzero_rat(40), y = rng.nonzero_rat(40);
    CHECK(F.val(x * y) == F.val(x) + F.val(y));
    if (x + y != 0) {
      long v = F.val(x + y);
      CHECK(v >= std::min(F.val(x), F.val(y)));
      if (F.val(x) != F.val(y)) CHECK(v == std::min(F.val(x), F.val(y)));
    }
  }
}

TEST_CASE("configuration rejects p = 2 and non-primes") {
  CHECK_THROWS(BaseField::make(Int(2), EtaleType::inert));
  CHECK_THROWS(BaseField::make(Int(9), EtaleType::split));
}

TEST_CASE("unramified character values") {
  BaseField Fi = BaseField::make(Int(7), EtaleType::inert);
  BaseField Fs = BaseField::make(Int(7), EtaleType::split);
  CHECK(Fi.eta(Rat(7)) == -1);
  CHECK(Fi.eta(Rat(10)) == 1);  // unit
  CHECK(Fs.eta(Rat(7 * 7 * 7)) == 1);
  UnramifiedCharacter xi{Rat(-1)};
  CHECK(xi.eval(Fi, Rat(49)) == 1);
  CHECK(xi.eval(Fi, Rat(7) / Rat(3)) == -1);
  CHECK_THROWS(xi.eval(Fi, Rat(0)));
}

TEST_CASE("character multiplicativity on random pairs") {
  BaseField F = BaseField::make(Int(5), EtaleType::inert);
  UnramifiedCharacter chi{Rat(-1)};
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    Rat x = rng.nonzero_rat(30), y = rng.nonzero_rat(30);
    CHECK(chi.eval(F, x * y) == chi.eval(F, x) * chi.eval(F, y));
  }
}

TEST_CASE("etale scalar ring operations") {
  BaseField Fs = BaseField::make(Int(5), EtaleType::split);
  EtaleScalar x{Rat(3), Rat(7)};
  CHECK(et_conj(Fs, x) == EtaleScalar{Rat(7), Rat(3)});
  CHECK_THROWS_AS(et_inv(Fs, EtaleScalar{Rat(2), Rat(0)}), std::domain_error);

  BaseField Fi = BaseField::make(Int(5), EtaleType::inert);
  EtaleScalar y{Rat(2), Rat(3)};
  CHECK(et_norm(Fi, y) == Rat(4) - Rat(Fi.d) * 9);
  CHECK(et_inv(Fi, EtaleScalar::one(Fi)) == EtaleScalar::one(Fi));
  CHECK(et_mul(Fi, y, et_inv(Fi, y)) == EtaleScalar::one(Fi));
}

TEST_CASE("conjugation is an involution preserving the norm") {
  Rng rng(11);
  for (EtaleType et : {EtaleType::split, EtaleType::inert}) {
    BaseField F = BaseField::make(Int(3), et);
    for (int i = 0; i < 1000; ++i) {
      EtaleScalar x{rng.rat(15), rng.rat(15)};
      CHECK(et_conj(F, et_conj(F, x)) == x);
      CHECK(et_norm(F, et_conj(F, x)) == et_norm(F, x));
      EtaleScalar y{rng.rat(15), rng.rat(15)};
      CHECK(et_norm(F, et_mul(F, x, y)) == et_norm(F, x) * et_norm(F, y));
    }
  }
}

TEST_CASE("mu must restrict to eta") {
  BaseField Fi = BaseField::make(Int(3), EtaleType::inert);
  CHECK_THROWS(EtaleCharacter::validated(Fi, Rat(1)));
  EtaleCharacter mu = EtaleCharacter::validated(Fi, Rat(-1));
  CHECK(mu.eval(Fi, EtaleScalar::from_base(Fi, Rat(3))) == -1);
  BaseField Fs = BaseField::make(Int(3), EtaleType::split);
  EtaleCharacter mus = EtaleCharacter::validated(Fs, Rat(5));
  CHECK(mus.eval(Fs, EtaleScalar::from_base(Fs, Rat(3))) == 1);  // diagonal restriction
}

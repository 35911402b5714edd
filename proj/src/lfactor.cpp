#include "orbw/lfactor.hpp"

namespace orbw {

static long require_integer(const Rat& x, const char* what) {
  if (x.get_den() != 1) throw std::invalid_argument(std::string(what) + " must be an integer (no half-integral exponents in scope)");
  return static_cast<long>(mpz_get_si(x.get_num().get_mpz_t()));
}

LaurentRational build_L(const LFactorSpec& spec, const BaseField& F) {
  long c0 = require_integer(spec.s_offset, "s offset");
  if (spec.s_coeff == 0) {
    Rat q = pow_p(F.p, spec.residue_deg);
    Rat v = Rat(1) - spec.chi_at_unif * pow_rat(q, -c0);
    if (v == 0) throw std::domain_error("constant L-spec with a pole");
    return LaurentRational::constant(Rat(1) / v);
  }
  Rat q_mc0 = pow_rat(pow_p(F.p, spec.residue_deg), -c0);
  return geometric_series(spec.chi_at_unif * q_mc0, spec.s_coeff * spec.residue_deg);
}

Rat L_value(const Rat& chi_at_unif, long s0, const BaseField& F, int residue_deg) {
  Rat q = pow_p(F.p, residue_deg);
  Rat v = Rat(1) - chi_at_unif * pow_rat(q, -s0);
  if (v == 0) throw std::domain_error("L-value at a pole");
  return Rat(1) / v;
}

LaurentRational L_central_block(int m, const Rat& chi_at_unif, int residue_deg, int sign,
                                const BaseField& F) {
  LaurentRational acc = LaurentRational::constant(Rat(1));
  for (int j = 1; j <= m; ++j) {
    LFactorSpec spec;
    spec.residue_deg = residue_deg;
    if (sign > 0) {
      spec.chi_at_unif = pow_rat(chi_at_unif, -j);
      spec.s_coeff = -j;
      spec.s_offset = Rat(-j + 1);
    } else {
      spec.chi_at_unif = pow_rat(chi_at_unif, j);
      spec.s_coeff = j;
      spec.s_offset = Rat(-j + 1);
    }
    acc = acc * build_L(spec, F);
  }
  return acc;
}

LaurentRational gamma_factor(const Rat& chi_at_unif, long c1, const Rat& c0, const BaseField& F,
                             int residue_deg) {
  LFactorSpec top;
  top.chi_at_unif = Rat(1) / chi_at_unif;
  top.s_coeff = -c1;
  top.s_offset = Rat(1) - c0;
  top.residue_deg = residue_deg;
  LFactorSpec bot;
  bot.chi_at_unif = chi_at_unif;
  bot.s_coeff = c1;
  bot.s_offset = c0;
  bot.residue_deg = residue_deg;
  return build_L(top, F) * lr_inverse(build_L(bot, F));
}

LaurentRational gamma_pm(int n, const Rat& xieta_at_p, int sign, const BaseField& F) {
  LaurentRational acc = LaurentRational::constant(Rat(1));
  for (int i = 1; i <= n; ++i) {
    if (sign > 0)
      acc = acc * gamma_factor(pow_rat(xieta_at_p, -i), -i, Rat(-i + 1), F);
    else
      acc = acc * gamma_factor(pow_rat(xieta_at_p, i), i, Rat(-i + 1), F);
  }
  return acc;
}

Rat zeta_n(const BaseField& F, int n) {
  Rat acc(1);
  for (int i = 1; i <= n; ++i) acc *= L_value(Rat(1), i, F);
  return acc;
}

}  // namespace orbw

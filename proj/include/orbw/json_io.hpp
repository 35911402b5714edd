#pragma once

#include "orbw/unitary.hpp"

#include <json.hpp>

namespace orbw {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json field_json(const BaseField& F);
BaseField field_from_json(const Json& j);

Json etale_json(const BaseField& F, const EtaleScalar& x);
EtaleScalar etale_from_json(const BaseField& F, const Json& j);

Json tilde_json(const TildeGl& X);
TildeGl tilde_from_json(const Json& j);

Json glnext_json(const GlNext& Y);
GlNext glnext_from_json(const Json& j);

Json s_elem_json(const BaseField& F, const SElement& x);
SElement s_elem_from_json(const BaseField& F, const Json& j);

Json qpoint_json(const QuotientPoint& a);
QuotientPoint qpoint_from_json(const Json& j);

Json laurent_json(const LaurentRational& R);
LaurentRational laurent_from_json(const Json& j);

Json lcf_json(const LatticeCosetFunction& f);
LatticeCosetFunction lcf_from_json(const Json& j);

Json monic_json(const MonicPoly& P);
MonicPoly monic_from_json(const Json& j);

Json descent_json(const DescentData& dd);

}  // namespace orbw

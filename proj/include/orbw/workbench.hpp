#pragma once

#include "orbw/json_io.hpp"

namespace orbw {

struct WorkbenchConfig {
  BaseField base = BaseField::make(Int(3), EtaleType::inert);
  UnramifiedCharacter xi{Rat(1)};
  Rat mu_at_p = -1;  // split: value at (p,1); inert must be -1
  EtaleScalar tau{Rat(0), Rat(1)};   // defaults: sqrt(d) inert, (1,-1) split
  EtaleScalar sigma{Rat(-1), Rat(0)};
  int oracle_window = 5;
  int oracle_depth = 8;
  std::uint64_t seed = 1;

  static WorkbenchConfig from_json(const Json& j);
  Json to_json() const;
  CayleyParams cayley() const;
  EtaleCharacter mu() const { return EtaleCharacter::validated(base, mu_at_p); }
};

WorkbenchConfig default_config_for(const BaseField& F);

// Dispatch a CLI verb on a JSON payload; throws on schema violations.
Json run_verb(const std::string& verb, const WorkbenchConfig& cfg, const Json& payload);

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The acceptance criteria, each as one or more named exact checks.
std::vector<CheckResult> run_acceptance(const std::string& selector, std::uint64_t seed);

// Assemble, digest and (optionally) persist a verification report.
Json verification_report(const std::string& suite, const std::vector<CheckResult>& checks);
std::uint64_t fnv1a_digest(const std::string& data);

}  // namespace orbw

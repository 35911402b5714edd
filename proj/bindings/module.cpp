#include "orbw/workbench.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace orbw;

namespace {

// JSON-string bridge: every verb of the CLI is available as run(verb, config, payload).
std::string run_json(const std::string& verb, const std::string& config_json,
                     const std::string& payload_json) {
  Json cfg_json = config_json.empty() ? Json{{"base", Json{{"p", 3}, {"etale", "inert"}}}}
                                      : Json::parse(config_json);
  WorkbenchConfig cfg = WorkbenchConfig::from_json(cfg_json);
  Json payload = payload_json.empty() ? Json::object() : Json::parse(payload_json);
  return run_verb(verb, cfg, payload).dump();
}

BaseField field_from_args(long p, const std::string& etale) {
  return BaseField::make(Int(p), etale == "split" ? EtaleType::split : EtaleType::inert);
}

}  // namespace

PYBIND11_MODULE(_orbw, m) {
  m.doc() = "Exact p-adic workbench: orbit classification and local orbital integrals";

  m.def("run", &run_json, py::arg("verb"), py::arg("config") = "", py::arg("payload") = "",
        "Dispatch a workbench verb on JSON strings; returns the result as a JSON string.");

  m.def(
      "valuation",
      [](const std::string& x, long p) {
        BaseField F = field_from_args(p, "inert");
        Rat r = rat_from_string(x);
        if (r == 0) throw py::value_error("valuation of zero");
        return F.val(r);
      },
      py::arg("x"), py::arg("p"));

  m.def(
      "charpoly",
      [](const std::vector<std::vector<std::string>>& rows) {
        int n = static_cast<int>(rows.size());
        MatQ A(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) A.at(i, j) = rat_from_string(rows[i][j]);
        std::vector<std::string> out;
        for (const auto& c : charpoly(A).cs) out.push_back(rat_to_string(c));
        return out;
      },
      py::arg("matrix"), "Monic characteristic polynomial; non-leading coefficients, constant first.");

  m.def(
      "minimal_recurrence",
      [](const std::vector<std::string>& moments) {
        std::vector<Rat> m;
        for (const auto& s : moments) m.push_back(rat_from_string(s));
        std::vector<std::string> out;
        for (const auto& c : minimal_recurrence(m).cs) out.push_back(rat_to_string(c));
        return out;
      },
      py::arg("moments"));

  m.def(
      "lfactor_central",
      [](long p, const std::string& etale, int n, int sign) {
        BaseField F = field_from_args(p, etale);
        return laurent_json(L_central(F, UnramifiedCharacter{Rat(1)}, n, sign)).dump();
      },
      py::arg("p"), py::arg("etale"), py::arg("n"), py::arg("sign"));

  m.def(
      "orbital_central_unit",
      [](long p, const std::string& etale, int n, int sign, const std::string& lambda) {
        BaseField F = field_from_args(p, etale);
        CentralElement Z{n, sign, rat_from_string(lambda), std::nullopt};
        LatticeCosetFunction phi =
            LatticeCosetFunction::std_lattice(Ambient{SpaceKind::tilde_gl, n, Rat(1)});
        return laurent_json(orbital_central(F, Z, phi, UnramifiedCharacter{Rat(1)})).dump();
      },
      py::arg("p"), py::arg("etale"), py::arg("n"), py::arg("sign"), py::arg("lambda") = "0",
      "I_{Z_lambda^{sign}}(1_{Lambda_0}) as canonical JSON.");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        return verification_report(suite, run_acceptance(suite, seed)).dump();
      },
      py::arg("suite") = "all", py::arg("seed") = 1,
      "Run an acceptance suite and return the report as a JSON string.");
}

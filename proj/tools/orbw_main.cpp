#include "orbw/workbench.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace orbw;

int main(int argc, char** argv) {
  CLI::App app{"orbw -- exact p-adic orbit and orbital-integral workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, in_path, out_path, route, suite = "all";
  std::uint64_t seed = 0;
  bool have_seed = false;
  app.add_option("--config", config_path, "configuration JSON file")->expected(1);
  app.add_option("--in", in_path, "payload JSON file (default: stdin)");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--route", route, "route selector for integrate");
  app.add_option("--seed", seed, "override the configured seed")->each([&](const std::string&) {
    have_seed = true;
  });

  const std::vector<std::string> verbs = {
      "invariants", "quotient",  "stratify",  "descend",          "orbits",    "classify",
      "cayley",     "lfactor",   "integrate", "integrate-oracle", "fourier",   "match",
      "orbits-unitary", "constants", "transfer-check", "verify"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& v : verbs) subs[v] = app.add_subcommand(v);
  subs["verify"]->add_option("suite", suite, "suite selector (all, unramified, routes, ...)");

  CLI11_PARSE(app, argc, argv);

  try {
    Json cfg_json;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open config: " + config_path);
      in >> cfg_json;
    } else {
      cfg_json = Json{{"base", Json{{"p", 3}, {"etale", "inert"}}}};
    }
    WorkbenchConfig cfg = WorkbenchConfig::from_json(cfg_json);
    if (have_seed) cfg.seed = seed;

    std::string verb;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) verb = name;

    Json payload = Json::object();
    if (verb == "verify") {
      payload["suite"] = suite;
    } else if (!in_path.empty()) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot open payload: " + in_path);
      in >> payload;
    } else if (verb != "verify") {
      std::cin >> payload;
    }
    if (!route.empty()) payload["route"] = route;

    Json result = run_verb(verb, cfg, payload);

    if (verb == "verify") {
      const char* dir = std::getenv("ORBW_RESULTS_DIR");
      std::string base = dir ? dir : "results";
      std::error_code ec;
      std::filesystem::create_directories(base, ec);
      if (!ec) {
        std::string path = base + "/report-" + result.at("digest").get<std::string>() + ".json";
        std::ofstream rf(path);
        rf << result.dump(2) << "\n";
      }
    }

    std::string text = result.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << text;
    } else {
      std::cout << text;
    }
    if (verb == "verify" && result.at("verdict") != "pass") return 1;
    if (verb == "transfer-check" && result.contains("verdict") && result.at("verdict") != "pass")
      return 1;
    return 0;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
}

// Command-line front end; everything goes through the C API.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beurling/beurling.h"

int main(int argc, char** argv) {
  CLI::App app{"Beurling prime systems with prescribed oscillation: experiments and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(bl_version()));

  // Options are kept as text and only forwarded when given, so a config file
  // supplies the rest.
  std::map<std::string, std::string> opts;
  std::string config_path;
  std::vector<std::string> tolerances;
  auto add = [&](const std::string& flag, const std::string& key, const std::string& help) {
    app.add_option(flag, opts[key], help);
  };
  add("--beta", "beta", "oscillation exponent, 0 < beta < 1");
  add("--K", "K", "number of oscillating factors");
  add("--x-max", "x_max", "prime generation horizon");
  app.add_option("--scheme", opts["scheme"], "discretization scheme")
      ->check(CLI::IsMember({"median", "random"}));
  add("--seed", "seed", "RNG seed");
  add("--threads", "threads", "worker threads");
  add("--out", "out", "output directory (BEURLING_OUT overrides)");
  add("--mode", "mode", "density: full or truncated");
  add("--n-max", "n_max", "zeros: number of zeros");
  add("--center", "center", "psi: centre of the log x window");
  add("--half-width", "half_width", "psi: half width of the log x window");
  add("--x", "x", "perron: upper limit x");
  add("--kappa", "kappa", "perron: abscissa of the line integral");
  add("--T", "T", "perron: truncation height");
  add("--perron-K", "perron_K", "perron: factors in zeta_{C,K}");
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--tol", tolerances, "tolerance override name=value (repeatable)");

  const std::pair<const char*, const char*> subs[] = {
      {"zeros", "zeros of G with winding certificates"},
      {"gfun", "g tables, decay fit and Mellin check"},
      {"density", "f_C and the Chebyshev constant"},
      {"discretize", "prime generation and discrepancy survey"},
      {"count", "N, psi and Pi tables, exp* and N-density profile"},
      {"zeta", "zeta identities and bound survey"},
      {"psi", "envelope oscillation of psi_C"},
      {"perron", "Perron cross-check"},
      {"all", "full acceptance suite"},
  };
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bl_config* cfg = nullptr;
  if (bl_config_create(&cfg) != BL_OK) {
    std::fprintf(stderr, "error: %s\n", bl_last_error());
    return 2;
  }
  auto fail = [&](const char* what) {
    std::fprintf(stderr, "invalid configuration: %s: %s\n", what, bl_last_error());
    bl_config_destroy(cfg);
    return 2;
  };
  if (!config_path.empty() && bl_config_load(cfg, config_path.c_str()) != BL_OK)
    return fail(config_path.c_str());
  for (const auto& [key, value] : opts) {
    if (value.empty()) continue;
    if (bl_config_set(cfg, key.c_str(), value.c_str()) != BL_OK) return fail(key.c_str());
  }
  for (const auto& t : tolerances) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) return fail("--tol expects name=value");
    if (bl_config_set(cfg, ("tol." + t.substr(0, eq)).c_str(), t.substr(eq + 1).c_str()) != BL_OK)
      return fail(t.c_str());
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  std::vector<char> report(1 << 20);
  const int rc = bl_run(sub.c_str(), cfg, report.data(), report.size());
  std::fputs(report.data(), rc == 2 ? stderr : stdout);
  bl_config_destroy(cfg);
  return rc;
}

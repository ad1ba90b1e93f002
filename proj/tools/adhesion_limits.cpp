// adhesion-limits: evaluate the exact viscous fields and their explicit
// vanishing-viscosity limits for two-component pressureless gas flow with
// step + point-mass initial data, and run the cross-verification suites.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "adhesion/profile_io.hpp"
#include "adhesion/run.hpp"

using namespace adhesion;

int main(int argc, char** argv) {
  CLI::App app{"exact viscous solutions and vanishing-viscosity limits"};
  app.require_subcommand(1);

  std::string config_path, params_flag, eps_flag, grid_flag, out_flag, format_flag, mode_flag;
  bool strict = false, show_config = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--params", params_flag, "a=...,c=...,b=...,d=...,u_a=...,u_b=...,rho_c=...,rho_d=...");
    sub->add_option("--eps", eps_flag, "comma-separated viscosities, strictly decreasing");
    sub->add_option("--grid", grid_flag, "x=lo:hi:n,t=lo:hi:n");
    sub->add_option("--out", out_flag, "output path");
    sub->add_option("--format", format_flag, "csv|json");
    sub->add_option("--measure-mode", mode_flag, "corrected|verbatim (case-4 atom weights)");
    sub->add_flag("--strict", strict, "escalate incomplete-configuration warnings to failures");
    sub->add_flag("--show-config", show_config, "print the effective config and exit");
  };

  const char* commands[] = {"eval-viscous", "eval-limit", "curves",
                            "convergence",  "check-weak", "oracle-diff"};
  const char* descs[] = {
      "grid of u^eps, R^eps plus V, S fields",
      "grid of limit u, R with region labels",
      "sampled wave-curve table and intersection times",
      "vanishing-viscosity convergence report at interior probes",
      "distributional-derivative and weak-form residual suites",
      "closed form vs quadrature vs finite differences"};
  for (int i = 0; i < 6; ++i) add_common(app.add_subcommand(commands[i], descs[i]));

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_path.empty())
      cfg = config_from_json(read_text_file(config_path));
    else
      cfg.tolerances = default_tolerances();
    cfg.command = app.get_subcommands().at(0)->get_name();
    // flags override the file
    if (!params_flag.empty()) apply_params_flag(cfg, params_flag);
    if (!eps_flag.empty()) apply_eps_flag(cfg, eps_flag);
    if (!grid_flag.empty()) apply_grid_flag(cfg, grid_flag);
    if (!out_flag.empty()) cfg.out = out_flag;
    if (!format_flag.empty()) cfg.format = format_flag;
    if (!mode_flag.empty()) {
      if (mode_flag != "corrected" && mode_flag != "verbatim")
        throw validation_error("--measure-mode must be corrected or verbatim");
      cfg.measure_mode =
          mode_flag == "verbatim" ? MeasureMode::Verbatim : MeasureMode::Corrected;
    }
    if (strict) cfg.strict = true;

    if (show_config) {
      validate_config(cfg);
      std::cout << effective_config_json(cfg);
      return kExitOk;
    }
    return run(cfg);
  } catch (const validation_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const numerics_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

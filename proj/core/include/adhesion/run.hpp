#pragma once

#include <map>
#include <string>
#include <vector>

#include "adhesion/measure.hpp"
#include "adhesion/problem.hpp"

namespace adhesion {

struct GridSpec {
  double x_lo = -5.0, x_hi = 5.0;
  int nx = 101;
  double t_lo = 0.1, t_hi = 5.0;
  int nt = 50;
};

/// Exit codes of run(): 0 ok, 2 verification failure, 3 numerical failure.
/// Config problems throw validation_error (the CLI maps them to exit 1).
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  ProblemParams params;
  std::string command; // eval-viscous | eval-limit | curves | convergence | check-weak | oracle-diff
  GridSpec grid;
  std::vector<double> epsilons = {1.0, 0.1, 0.01};
  bool epsilons_overridden = false;
  std::map<std::string, double> tolerances; // see default_tolerances()
  std::string out = "out.csv";
  std::string format = "csv"; // csv | json
  bool strict = false;
  MeasureMode measure_mode = MeasureMode::Corrected;
};

std::map<std::string, double> default_tolerances();

/// Config file ingestion and flag overrides (flags win over the file).
RunConfig config_from_json(const std::string& json_text);
void apply_params_flag(RunConfig& cfg, const std::string& kv_list); // "a=0,c=1,..."
void apply_eps_flag(RunConfig& cfg, const std::string& csv);        // "1,0.1,0.01"
void apply_grid_flag(RunConfig& cfg, const std::string& spec);      // "x=-5:5:101,t=0.1:5:50"
std::string effective_config_json(const RunConfig& cfg);

/// Validates the config (grid counts >= 2, epsilons positive strictly
/// decreasing, known command/format) — throws validation_error.
void validate_config(const RunConfig& cfg);

/// Executes the command, writes the artifact at cfg.out plus a sidecar
/// <out>.meta.json, and returns the exit code.
int run(const RunConfig& cfg);

} // namespace adhesion

#pragma once

#include <string>
#include <vector>

#include "adhesion/curves.hpp"
#include "adhesion/measure.hpp"
#include "adhesion/problem.hpp"

namespace adhesion {

struct CheckReport {
  std::string case_name;
  std::string subcase;
  std::string check; // "distributional-derivative" | "burgers-weak"
  std::string phi_descriptor;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Verifies <R_x, phi> = -<R, phi_x>: the left side pairs the measure
/// rho_measure(t) with phi slice by slice, the right side is the 2-D
/// quadrature of -R phi_x over the region decomposition. phi must be
/// compactly supported in t > 0. Passes iff |lhs - rhs| <= tol (1 + |lhs|).
CheckReport check_distributional_derivative(const ProblemParams& p, const CurveSet& cs,
                                            const Bump& phi, double tol,
                                            MeasureMode mode = MeasureMode::Corrected);

/// Weak-form residual of the velocity conservation law with flux u^2/2:
///   iint (u phi_t + u^2/2 phi_x) dx dt
///   + u_a int_{-inf}^a phi(x,0) dx + u_b phi(b,0)
/// (initial terms only when the bump touches t = 0). Passes iff
/// |residual| <= tol * scale, scale = max(1, sum |assembled terms|).
CheckReport burgers_weak_residual(const ProblemParams& p, const CurveSet& cs, const Bump& phi,
                                  double tol);

/// Deterministic bump battery for one case: `n_random` seeded random bumps
/// plus bumps straddling every carrier-curve piece and every breakpoint time.
/// When `touch_t0` is set, some bumps reach below t = 0 (for the weak check).
std::vector<Bump> make_bump_battery(const ProblemParams& p, const CurveSet& cs, int n_random,
                                    unsigned seed, bool touch_t0);

} // namespace adhesion

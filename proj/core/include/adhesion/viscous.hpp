#pragma once

#include "adhesion/log_scaled.hpp"
#include "adhesion/problem.hpp"

namespace adhesion {

/// Closed-form solutions of the linearized system
///   V_t = (eps/2) V_xx,  S_t = (eps/2) S_xx
/// with the step/exponential initial data induced by ProblemParams, and the
/// recovered fields u = -eps V_x / V and R = S / V.
///
/// Both V and S are sums of Gaussian-tail terms whose exponents scale like
/// 1/eps. The stable evaluators keep every term as sign * exp(exponent) and
/// reduce sums by dominant-exponent factoring (LogScaled), so results
/// stay finite for eps down to 1e-6 and beyond even where V itself leaves
/// double range.

/// V as sign/log-magnitude (always finite), and as double (throws on overflow).
LogScaled v_eps_log(const ProblemParams& p, double x, double t, double eps);
double v_eps(const ProblemParams& p, double x, double t, double eps);

LogScaled s_eps_log(const ProblemParams& p, double x, double t, double eps);
double s_eps(const ProblemParams& p, double x, double t, double eps);

/// Result of a pointwise u/R evaluation. `boundary` marks x lying exactly on
/// one of the stations {a, b, c, d, a + u_a t}; there the value comes from the
/// plain quotient when finite (the stable path otherwise).
struct TaggedValue {
  double value = 0.0;
  bool boundary = false;
};

TaggedValue u_eps_stable(const ProblemParams& p, double x, double t, double eps);
TaggedValue r_eps_stable(const ProblemParams& p, double x, double t, double eps);

/// Direct double-precision quotients of the displayed numerators/denominators.
/// Reference implementations: valid only where no intermediate overflows;
/// throw numerics_error otherwise.
double u_eps_naive(const ProblemParams& p, double x, double t, double eps);
double r_eps_naive(const ProblemParams& p, double x, double t, double eps);

/// rho^eps = (S/V)_x by central differences of r_eps_stable,
/// step h = sqrt(machine eps) * max(1, |x|).
double rho_eps_fd(const ProblemParams& p, double x, double t, double eps);

} // namespace adhesion

#pragma once

#include <string>
#include <vector>

#include "adhesion/curves.hpp"
#include "adhesion/limit.hpp"
#include "adhesion/problem.hpp"

namespace adhesion {

struct ProbePoint {
  double x = 0.0, t = 0.0;
  std::string u_label, r_label;
};

/// Per-point record of |u^eps - u| and |R^eps - R| along the eps sequence.
struct PointReport {
  ProbePoint point;
  std::vector<double> eps;
  std::vector<double> err_u, err_r;
  bool non_monotone_tail = false; // last two terms increased
  bool pass = false;
};

struct ConvergenceReport {
  std::vector<PointReport> points;
  bool pass = true;
};

/// Checks u^eps -> u and R^eps -> R at interior points. Each point must be at
/// least `margin` away from every region boundary at its time slice (throws
/// validation_error otherwise). Passing requires the final errors within the
/// tolerances and the last two error terms non-increasing.
ConvergenceReport verify_limit_convergence(const ProblemParams& p, const CurveSet& cs,
                                           const std::vector<ProbePoint>& points,
                                           const std::vector<double>& eps_seq, double margin,
                                           double tol_u, double tol_r_rel);

/// Picks up to `per_kind` interior probe points for every u-kind and R-kind
/// region the case exhibits, with margin `margin` from all boundaries,
/// scanning a spread of time slices.
std::vector<ProbePoint> make_probe_points(const ProblemParams& p, const CurveSet& cs,
                                          double margin, int per_kind);

} // namespace adhesion

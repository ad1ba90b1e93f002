#pragma once

#include <functional>

#include "adhesion/log_scaled.hpp"
#include "adhesion/problem.hpp"

namespace adhesion {

/// Adaptive Gauss-Kronrod 7/15 on a finite interval.
/// Bisects until every panel's |K15 - G7| fits within its share of
/// max(abs_tol, rel_tol * |integral|). Throws numerics_error past max_panels.
struct GKResult {
  double value = 0.0;
  double abs_error = 0.0;
  int panels = 1;
};
GKResult gk_integrate(const std::function<double(double)>& f, double lo, double hi,
                      double rel_tol = 1e-10, double abs_tol = 1e-14, int max_panels = 4000);

/// \int_U^inf g(w) e-decaying dw via w = U + tan(pi r / 2), r in (0,1).
GKResult gk_integrate_upper_tail(const std::function<double(double)>& g, double U,
                                 double rel_tol = 1e-10, double abs_tol = 1e-14);
/// \int_{-inf}^U g(w) dw via w = U - tan(pi r / 2).
GKResult gk_integrate_lower_tail(const std::function<double(double)>& g, double U,
                                 double rel_tol = 1e-10, double abs_tol = 1e-14);

/// Independent heat-kernel oracle for the closed forms: V and S computed by
/// integrating the raw initial data against the Gaussian kernel, with each
/// piece reduced (by completing the square) to an integral of
/// (alpha w + beta) e^{-w^2} over a half-line or finite window.
struct QuadratureResult {
  double value = 0.0;              ///< +-inf when the true value leaves double range
  double abs_error_estimate = 0.0; ///< rel_error_estimate * |value|
  int subdivisions = 0;
  LogScaled log_value;             ///< always-finite representation
  double rel_error_estimate = 0.0;
};

QuadratureResult v_quad(const ProblemParams& p, double x, double t, double eps,
                        double tol = 1e-10);
QuadratureResult s_quad(const ProblemParams& p, double x, double t, double eps,
                        double tol = 1e-10);

} // namespace adhesion

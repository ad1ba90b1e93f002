#pragma once

#include <vector>

#include "adhesion/problem.hpp"

namespace adhesion {

/// Crank-Nicolson solver for V_t = (eps/2) V_xx, S_t = (eps/2) S_xx on a
/// uniform grid. Second order in space and time; the first steps are
/// implicit-Euler substeps (Rannacher smoothing) so the discontinuous initial
/// data does not pollute the convergence order.
struct FDGrid {
  double x_min = -12.0;
  double x_max = 15.0;
  int nx = 1001;
  double dt = 1e-3;
  /// FarField: Dirichlet values from the exact far-field evolution of the
  /// initial exponential/constant tails. Frozen: hold the initial values.
  enum class Boundary { FarField, Frozen } boundary = Boundary::FarField;
};

struct HeatFields {
  std::vector<double> x, V, S;
  double t = 0.0;
  /// mesh number eps*dt/(2 h^2); the scheme is A-stable for any value,
  /// oscillation-free (discrete max principle) for <= 1.
  double mesh_ratio = 0.0;

  /// 4-point Lagrange interpolation (O(h^4), below the scheme error).
  double probe_V(double xq) const;
  double probe_S(double xq) const;
};

HeatFields heat_fd_solve(const ProblemParams& p, double eps, const FDGrid& grid, double t_end);

/// Grid with h = (d - b) / m and both jump stations (b for V, d for S) on
/// nodes, padded at least `pad` beyond [a, d]. Keeps the discontinuous data
/// projection second-order so Richardson studies see clean h^2 behavior.
FDGrid make_aligned_grid(const ProblemParams& p, double pad, int m);

/// Same solver on caller-supplied initial samples (linearity tests etc.).
HeatFields heat_fd_solve_samples(std::vector<double> v0, std::vector<double> s0,
                                 double eps, const FDGrid& grid, double t_end);

/// Gaussian-tail bound on the influence of the domain truncation at a probe.
double boundary_influence_bound(const FDGrid& grid, double eps, double t_end, double probe_x);

} // namespace adhesion

#include "adhesion/heat_fd.hpp"

#include <cmath>

#include "adhesion/gauss_erfc.hpp"

namespace adhesion {

namespace {

double lagrange4(const std::vector<double>& xs, const std::vector<double>& ys, double xq) {
  // pick the 4-point stencil centered on xq
  const double h = xs[1] - xs[0];
  int i = static_cast<int>(std::floor((xq - xs[0]) / h));
  i = std::max(1, std::min(static_cast<int>(xs.size()) - 3, i));
  const int j0 = i - 1;
  double acc = 0.0;
  for (int j = j0; j < j0 + 4; ++j) {
    double lj = 1.0;
    for (int k = j0; k < j0 + 4; ++k)
      if (k != j) lj *= (xq - xs[k]) / (xs[j] - xs[k]);
    acc += ys[j] * lj;
  }
  return acc;
}

struct FarField {
  const ProblemParams& p;
  double eps;
  double v_left(double x, double t) const {
    return std::exp(-p.u_a * (x - p.a) / eps + p.u_a * p.u_a * t / (2.0 * eps));
  }
  double v_right(double) const { return std::exp(-p.u_b / eps); }
  double s_left(double x, double t) const {
    return p.rho_c * (x - p.u_a * t - p.c) * v_left(x, t);
  }
  double s_right(double) const { return p.rho_d * std::exp(-p.u_b / eps); }
};

// Solves (I - mu/2 d2) y = rhs with Dirichlet values already placed in y[0], y[n-1].
void thomas_cn_step(std::vector<double>& y, const std::vector<double>& prev, double mu,
                    double theta) {
  // theta = 1: backward Euler; theta = 1/2: Crank-Nicolson.
  const int n = static_cast<int>(y.size());
  const int m = n - 2;
  static thread_local std::vector<double> c_prime, d_prime;
  c_prime.assign(m, 0.0);
  d_prime.assign(m, 0.0);
  const double diag = 1.0 + 2.0 * theta * mu;
  const double off = -theta * mu;
  const double ex = (1.0 - theta) * mu;
  auto rhs = [&](int i) {
    double r = prev[i] + ex * (prev[i - 1] - 2.0 * prev[i] + prev[i + 1]);
    if (i == 1) r -= off * y[0];
    if (i == n - 2) r -= off * y[n - 1];
    return r;
  };
  c_prime[0] = off / diag;
  d_prime[0] = rhs(1) / diag;
  for (int i = 1; i < m; ++i) {
    const double denom = diag - off * c_prime[i - 1];
    c_prime[i] = off / denom;
    d_prime[i] = (rhs(i + 1) - off * d_prime[i - 1]) / denom;
  }
  y[n - 2] = d_prime[m - 1];
  for (int i = m - 2; i >= 0; --i) y[i + 1] = d_prime[i] - c_prime[i] * y[i + 2];
}

HeatFields run_solver(const ProblemParams* p, std::vector<double> V, std::vector<double> S,
                      double eps, const FDGrid& grid, double t_end) {
  if (grid.nx < 5) throw validation_error("heat_fd_solve: nx too small");
  if (!(grid.dt > 0.0) || !(eps > 0.0) || !(t_end > 0.0))
    throw validation_error("heat_fd_solve: dt, eps, t_end must be positive");
  const double h = (grid.x_max - grid.x_min) / (grid.nx - 1);
  HeatFields out;
  out.x.resize(grid.nx);
  for (int i = 0; i < grid.nx; ++i) out.x[i] = grid.x_min + i * h;

  const int nsteps = std::max(1, static_cast<int>(std::ceil(t_end / grid.dt)));
  const double dt = t_end / nsteps;
  const double mu = eps * dt / (2.0 * h * h);
  out.mesh_ratio = mu;

  const bool farfield = (grid.boundary == FDGrid::Boundary::FarField) && p != nullptr;
  FarField ff{p ? *p : ProblemParams{}, eps};

  auto set_boundaries = [&](std::vector<double>& v, std::vector<double>& s, double t) {
    if (!farfield) return; // frozen: keep the initial boundary samples
    v.front() = ff.v_left(grid.x_min, t);
    v.back() = ff.v_right(t);
    s.front() = ff.s_left(grid.x_min, t);
    s.back() = ff.s_right(t);
  };

  std::vector<double> Vp, Sp;
  double t = 0.0;
  for (int step = 0; step < nsteps; ++step) {
    // Rannacher start: the first two steps are pairs of implicit-Euler
    // half-steps, damping the high modes excited by the initial jumps.
    const bool smooth_start = step < 2;
    const int sub = smooth_start ? 2 : 1;
    const double theta = smooth_start ? 1.0 : 0.5;
    for (int k = 0; k < sub; ++k) {
      const double sub_dt = dt / sub;
      const double sub_mu = eps * sub_dt / (2.0 * h * h);
      t += sub_dt;
      Vp = V;
      Sp = S;
      set_boundaries(V, S, t);
      thomas_cn_step(V, Vp, sub_mu, theta);
      thomas_cn_step(S, Sp, sub_mu, theta);
    }
  }
  out.V = std::move(V);
  out.S = std::move(S);
  out.t = t;
  return out;
}

} // namespace

double HeatFields::probe_V(double xq) const { return lagrange4(x, V, xq); }
double HeatFields::probe_S(double xq) const { return lagrange4(x, S, xq); }

HeatFields heat_fd_solve(const ProblemParams& p, double eps, const FDGrid& grid, double t_end) {
  const double h = (grid.x_max - grid.x_min) / (grid.nx - 1);
  std::vector<double> V(grid.nx), S(grid.nx);
  const double vb = std::exp(-p.u_b / eps);
  const double snap = 1e-9 * h; // node sitting on a jump within rounding
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x_min + i * h;
    if (std::abs(x - p.b) <= snap)
      V[i] = 0.5 * (1.0 + vb); // midpoint at the jump
    else if (x < p.a)
      V[i] = std::exp(-p.u_a * (x - p.a) / eps);
    else if (x < p.b)
      V[i] = 1.0;
    else
      V[i] = vb;
    if (std::abs(x - p.d) <= snap)
      S[i] = 0.5 * p.rho_d * vb;
    else if (x < p.a)
      S[i] = p.rho_c * (x - p.c) * std::exp(-p.u_a * (x - p.a) / eps);
    else if (x < p.c)
      S[i] = p.rho_c * (x - p.c);
    else if (x < p.d)
      S[i] = 0.0;
    else
      S[i] = p.rho_d * vb;
  }
  return run_solver(&p, std::move(V), std::move(S), eps, grid, t_end);
}

HeatFields heat_fd_solve_samples(std::vector<double> v0, std::vector<double> s0, double eps,
                                 const FDGrid& grid, double t_end) {
  if (static_cast<int>(v0.size()) != grid.nx || static_cast<int>(s0.size()) != grid.nx)
    throw validation_error("heat_fd_solve_samples: sample size != nx");
  FDGrid g = grid;
  g.boundary = FDGrid::Boundary::Frozen;
  return run_solver(nullptr, std::move(v0), std::move(s0), eps, g, t_end);
}

FDGrid make_aligned_grid(const ProblemParams& p, double pad, int m) {
  FDGrid g;
  const double h = (p.d - p.b) / m;
  const int k_lo = static_cast<int>(std::ceil((p.b - (p.a - pad)) / h));
  const int k_hi = static_cast<int>(std::ceil((p.d + pad - p.b) / h));
  g.x_min = p.b - k_lo * h;
  g.x_max = p.b + k_hi * h;
  g.nx = k_lo + k_hi + 1;
  g.dt = h / 2.0;
  return g;
}

double boundary_influence_bound(const FDGrid& grid, double eps, double t_end, double probe_x) {
  const double dist = std::min(probe_x - grid.x_min, grid.x_max - probe_x);
  if (dist <= 0.0) return 1.0;
  const double z = dist / std::sqrt(2.0 * t_end * eps);
  return std::exp(-z * z);
}

} // namespace adhesion

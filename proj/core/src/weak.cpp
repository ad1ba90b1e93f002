#include "adhesion/weak.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "adhesion/limit.hpp"
#include "adhesion/quadrature.hpp"

namespace adhesion {

namespace {

// Outer time integration split at curve breakpoints (the inner x-integral is
// smooth in t between them).
std::vector<double> time_chunks(const CurveSet& cs, double t_lo, double t_hi) {
  std::vector<double> cuts = {t_lo, t_hi};
  for (const auto& c : cs.curves)
    for (double bp : c.breakpoints())
      if (bp > t_lo && bp < t_hi) cuts.push_back(bp);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

template <typename Inner>
double integrate_time(const CurveSet& cs, double t_lo, double t_hi, const Inner& inner,
                      double rel_tol) {
  const auto cuts = time_chunks(cs, t_lo, t_hi);
  double acc = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    acc += gk_integrate(inner, cuts[i], cuts[i + 1], rel_tol, 1e-14).value;
  return acc;
}

} // namespace

CheckReport check_distributional_derivative(const ProblemParams& p, const CurveSet& cs,
                                            const Bump& phi, double tol, MeasureMode mode) {
  if (!(phi.t_lo() > 0.0))
    throw validation_error("check_distributional_derivative: bump must live in t > 0");
  CheckReport rep;
  rep.case_name = to_string(cs.sign_case.case_id);
  rep.subcase = to_string(cs.sign_case.subcase);
  rep.check = "distributional-derivative";
  rep.phi_descriptor = phi.descriptor();
  rep.tol = tol;

  // lhs: <rho, phi> integrated over time.
  auto lhs_inner = [&](double t) {
    return pair_measure(p, rho_measure(p, cs, t, mode), phi, t, 1e-11);
  };
  rep.lhs = integrate_time(cs, phi.t_lo(), phi.t_hi(), lhs_inner, 1e-10);

  // rhs: -iint R phi_x dx dt over the region decomposition.
  auto rhs_inner = [&](double t) {
    double acc = 0.0;
    for (const auto& seg : regions_at(p, cs, t, phi.x_lo(), phi.x_hi())) {
      acc -= gk_integrate(
                 [&](double x) { return R_value(p, seg.r_kind, x, t) * phi.dx(x, t); },
                 seg.lo, seg.hi, 1e-11, 1e-15)
                 .value;
    }
    return acc;
  };
  rep.rhs = integrate_time(cs, phi.t_lo(), phi.t_hi(), rhs_inner, 1e-10);

  rep.residual = rep.lhs - rep.rhs;
  rep.pass = std::abs(rep.residual) <= tol * (1.0 + std::abs(rep.lhs));
  return rep;
}

CheckReport burgers_weak_residual(const ProblemParams& p, const CurveSet& cs, const Bump& phi,
                                  double tol) {
  CheckReport rep;
  rep.case_name = to_string(cs.sign_case.case_id);
  rep.subcase = to_string(cs.sign_case.subcase);
  rep.check = "burgers-weak";
  rep.phi_descriptor = phi.descriptor();
  rep.tol = tol;

  const double t_lo = std::max(phi.t_lo(), 0.0);
  const double t_hi = phi.t_hi();

  auto inner_ut = [&](double t) {
    double acc = 0.0;
    for (const auto& seg : regions_at(p, cs, t, phi.x_lo(), phi.x_hi()))
      acc += gk_integrate(
                 [&](double x) { return u_value(p, seg.u_kind, x, t) * phi.dt(x, t); },
                 seg.lo, seg.hi, 1e-11, 1e-15)
                 .value;
    return acc;
  };
  auto inner_fx = [&](double t) {
    double acc = 0.0;
    for (const auto& seg : regions_at(p, cs, t, phi.x_lo(), phi.x_hi()))
      acc += gk_integrate(
                 [&](double x) {
                   const double u = u_value(p, seg.u_kind, x, t);
                   return 0.5 * u * u * phi.dx(x, t);
                 },
                 seg.lo, seg.hi, 1e-11, 1e-15)
                 .value;
    return acc;
  };
  const double i_ut = integrate_time(cs, t_lo, t_hi, inner_ut, 1e-10);
  const double i_fx = integrate_time(cs, t_lo, t_hi, inner_fx, 1e-10);

  // velocity initial data: step of height u_a below a plus the point mass at b
  double init_a = 0.0, init_b = 0.0;
  if (phi.t_lo() < 0.0) {
    if (phi.x_lo() < p.a)
      init_a = p.u_a * gk_integrate([&](double x) { return phi.value(x, 0.0); }, phi.x_lo(),
                                    std::min(p.a, phi.x_hi()), 1e-11, 1e-15)
                           .value;
    init_b = p.u_b * phi.value(p.b, 0.0);
  }

  rep.lhs = i_ut + i_fx;
  rep.rhs = -(init_a + init_b);
  rep.residual = i_ut + i_fx + init_a + init_b;
  const double scale =
      std::max(1.0, std::abs(i_ut) + std::abs(i_fx) + std::abs(init_a) + std::abs(init_b));
  rep.pass = std::abs(rep.residual) <= tol * scale;
  return rep;
}

std::vector<Bump> make_bump_battery(const ProblemParams& p, const CurveSet& cs, int n_random,
                                    unsigned seed, bool touch_t0) {
  std::vector<Bump> bumps;

  // one bump per carrier-curve piece, centered on the curve mid-piece
  for (const auto& c : cs.curves) {
    if (c.label.rfind("gamma", 0) != 0) continue;
    for (const auto& piece : c.pieces) {
      const double lo = piece.t_lo;
      if (lo > 40.0) continue;
      const double hi = std::isfinite(piece.t_hi) ? piece.t_hi : lo + 2.0;
      const double tc = std::max(0.5 * (lo + hi), 0.15);
      bumps.push_back({c.eval(tc), 0.8, tc, std::min(0.5 * tc, 0.6)});
    }
    // and one straddling each breakpoint time
    for (double bp : c.breakpoints()) {
      if (!(bp > 0.0) || bp > 40.0) continue;
      bumps.push_back({c.eval(bp), 0.8, bp, std::min(0.5 * bp, 0.6)});
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(p.a - 3.0, p.d + 3.0);
  std::uniform_real_distribution<double> ut(0.2, 3.5);
  std::uniform_real_distribution<double> uw(0.3, 1.4);
  for (int i = 0; i < n_random; ++i) {
    Bump b;
    b.x0 = ux(rng);
    b.wx = uw(rng);
    b.t0 = ut(rng);
    b.wt = std::min(uw(rng), 0.45 * b.t0);
    if (touch_t0 && i % 3 == 0) b.wt = b.t0 + 0.2; // reaches below t = 0
    bumps.push_back(b);
  }
  if (touch_t0) bumps.push_back({p.b, 1.0, 0.0, 0.4}); // initial point mass seen directly
  return bumps;
}

} // namespace adhesion

#include "adhesion/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "adhesion/viscous.hpp"

namespace adhesion {

namespace {

double margin_at(const ProblemParams& p, const CurveSet& cs, double x, double t) {
  // distance from x to the nearest station or curve position at time t
  double m = std::min({std::abs(x - p.a), std::abs(x - p.b), std::abs(x - p.c),
                       std::abs(x - p.d)});
  for (const auto& c : cs.curves) m = std::min(m, std::abs(x - c.eval(t)));
  return m;
}

} // namespace

ConvergenceReport verify_limit_convergence(const ProblemParams& p, const CurveSet& cs,
                                           const std::vector<ProbePoint>& points,
                                           const std::vector<double>& eps_seq, double margin,
                                           double tol_u, double tol_r_rel) {
  if (eps_seq.size() < 2) throw validation_error("verify_limit_convergence: need >= 2 eps");
  ConvergenceReport rep;
  for (const auto& pt : points) {
    if (margin_at(p, cs, pt.x, pt.t) < margin)
      throw validation_error("verify_limit_convergence: probe (" + std::to_string(pt.x) + "," +
                             std::to_string(pt.t) + ") closer than margin to a boundary");
    const LimitValue ul = u_limit(p, cs, pt.x, pt.t);
    const LimitValue rl = R_limit(p, cs, pt.x, pt.t);
    if (ul.boundary || rl.boundary)
      throw validation_error("verify_limit_convergence: probe on a boundary");
    PointReport pr;
    pr.point = pt;
    pr.point.u_label = ul.label;
    pr.point.r_label = rl.label;
    for (double eps : eps_seq) {
      pr.eps.push_back(eps);
      pr.err_u.push_back(std::abs(u_eps_stable(p, pt.x, pt.t, eps).value - ul.value));
      pr.err_r.push_back(std::abs(r_eps_stable(p, pt.x, pt.t, eps).value - rl.value));
    }
    const size_t n = pr.eps.size();
    // below the noise floor the sequence has converged; jitter there is not a
    // failure of monotonicity
    const double floor_u = 1e-9;
    const double floor_r = 1e-9 * (1.0 + std::abs(rl.value));
    pr.non_monotone_tail =
        (pr.err_u[n - 1] > std::max(pr.err_u[n - 2], floor_u)) ||
        (pr.err_r[n - 1] > std::max(pr.err_r[n - 2], floor_r));
    const bool final_ok = pr.err_u[n - 1] <= tol_u &&
                          pr.err_r[n - 1] <= tol_r_rel * (1.0 + std::abs(rl.value));
    pr.pass = final_ok && !pr.non_monotone_tail;
    rep.pass = rep.pass && pr.pass;
    rep.points.push_back(std::move(pr));
  }
  return rep;
}

std::vector<ProbePoint> make_probe_points(const ProblemParams& p, const CurveSet& cs,
                                          double margin, int per_kind) {
  std::map<UKind, int> u_hits;
  std::map<RKind, int> r_hits;
  std::vector<ProbePoint> out;

  const std::vector<double> times = {0.35, 0.8, 1.6, 3.3, 7.1, 13.7};
  for (double t : times) {
    // window covering every wave plus slack
    double lo = std::min({p.a, p.a + p.u_a * t, p.b + p.u_b * t, p.a - 1.0});
    double hi = std::max({p.d, p.a + p.u_a * t, p.b - p.u_b * t, p.d + 1.0});
    for (const auto& c : cs.curves) {
      lo = std::min(lo, c.eval(t));
      hi = std::max(hi, c.eval(t));
    }
    lo -= 3.0;
    hi += 3.0;
    for (const auto& seg : regions_at(p, cs, t, lo, hi)) {
      if (seg.hi - seg.lo < 2.0 * margin + 0.05) continue;
      const bool need_u = u_hits[seg.u_kind] < per_kind;
      const bool need_r = r_hits[seg.r_kind] < per_kind;
      if (!need_u && !need_r) continue;
      for (double frac : {0.5, 0.2, 0.8}) {
        const double x = seg.lo + margin + frac * (seg.hi - seg.lo - 2.0 * margin);
        if (u_hits[seg.u_kind] >= per_kind && r_hits[seg.r_kind] >= per_kind) break;
        u_hits[seg.u_kind]++;
        r_hits[seg.r_kind]++;
        out.push_back({x, t, label_of(seg.u_kind), label_of(seg.r_kind)});
      }
    }
  }
  return out;
}

} // namespace adhesion

#include "adhesion/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "adhesion/gauss_erfc.hpp"

namespace adhesion {

namespace {

// Kronrod-15 nodes (positive half) and weights; Gauss-7 shares nodes 1,3,5,7.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {lo, hi, resk * h, std::abs((resk - resg) * h)};
}

// Worst-panel-first refinement until the summed error estimate fits the
// budget. `seeds` pre-splits the interval (used to bracket needle-shaped
// integrands that a single coarse panel would miss entirely).
GKResult gk_adaptive(const std::function<double(double)>& f, double lo, double hi,
                     double rel_tol, double abs_tol, int max_panels,
                     const std::vector<double>& seeds) {
  if (lo == hi) return {0.0, 0.0, 0};
  std::vector<Panel> panels;
  double prev = lo;
  for (double s : seeds)
    if (s > prev && s < hi) {
      panels.push_back(gk15(f, prev, s));
      prev = s;
    }
  panels.push_back(gk15(f, prev, hi));

  while (true) {
    double total = 0.0, err = 0.0, gross = 0.0;
    size_t worst = 0;
    for (size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      gross += std::abs(panels[i].value);
      if (panels[i].error > panels[worst].error) worst = i;
    }
    // the gross-mass floor is the honest roundoff limit when the signed
    // parts of the integrand cancel
    if (err <= std::max({abs_tol, rel_tol * std::abs(total), 4.4e-16 * gross}) ||
        panels[worst].hi - panels[worst].lo < 1e-15 * (hi - lo)) {
      GKResult r;
      r.value = total;
      r.abs_error = err;
      r.panels = static_cast<int>(panels.size());
      return r;
    }
    if (static_cast<int>(panels.size()) >= max_panels)
      throw numerics_error("gk_integrate: no convergence after max subdivisions");
    const Panel w = panels[worst];
    const double mid = 0.5 * (w.lo + w.hi);
    panels[worst] = gk15(f, w.lo, mid);
    panels.push_back(gk15(f, mid, w.hi));
  }
}

} // namespace

GKResult gk_integrate(const std::function<double(double)>& f, double lo, double hi,
                      double rel_tol, double abs_tol, int max_panels) {
  return gk_adaptive(f, lo, hi, rel_tol, abs_tol, max_panels, {});
}

GKResult gk_integrate_upper_tail(const std::function<double(double)>& g, double U,
                                 double rel_tol, double abs_tol) {
  // Gaussian-factor integrands vanish for |w| > 28 at double precision, so
  // starting the map there loses nothing; the seed ladder brackets the mass
  // so it cannot hide between the nodes of one coarse panel.
  const double U0 = std::max(U, -28.0);
  auto h = [&](double r) {
    const double tn = std::tan(1.5707963267948966 * r);
    const double gv = g(U0 + tn);
    if (gv == 0.0) return 0.0;
    return gv * 1.5707963267948966 * (1.0 + tn * tn);
  };
  std::vector<double> seeds;
  for (double o = 0.25; o < 28.0 - U0; o *= 2.0)
    seeds.push_back(std::atan(o) / 1.5707963267948966);
  return gk_adaptive(h, 0.0, 1.0, rel_tol, abs_tol, 4000, seeds);
}

GKResult gk_integrate_lower_tail(const std::function<double(double)>& g, double U,
                                 double rel_tol, double abs_tol) {
  // reflect around the origin so the Gaussian mass stays where the seeds are
  return gk_integrate_upper_tail([&](double w) { return g(-w); }, -U, rel_tol, abs_tol);
}

namespace {

// Gaussian moments \int (alpha w + beta) e^{-w^2} dw over windows and
// half-lines, returned as gk.value * e^{exponent}. The exponent is the
// squared distance of the window to the origin, factored out analytically,
// so the numerical integrand is O(1) at the near edge and the oracle stays
// meaningful at any viscosity, far beyond double range.
struct ShiftedMoment {
  GKResult gk;
  double exponent = 0.0;
};

ShiftedMoment gauss_moment_window(double alpha, double beta, double lo, double hi,
                                  double rel_tol, double abs_tol) {
  if (lo > hi) {
    ShiftedMoment r = gauss_moment_window(alpha, beta, hi, lo, rel_tol, abs_tol);
    r.gk.value = -r.gk.value;
    return r;
  }
  ShiftedMoment r;
  if (lo <= 0.0 && hi >= 0.0) {
    // window straddles the origin: no shift needed, just bracket the mass
    auto f = [alpha, beta](double w) {
      const double q = w * w;
      if (q > 745.0) return 0.0;
      return (alpha * w + beta) * std::exp(-q);
    };
    std::vector<double> seeds;
    for (double o : {-20.0, -8.0, -3.0, -1.0, 0.0, 1.0, 3.0, 8.0, 20.0}) seeds.push_back(o);
    r.exponent = 0.0;
    r.gk = gk_adaptive(f, lo, hi, rel_tol, abs_tol, 4000, seeds);
    return r;
  }
  // anchor at the edge nearest the origin and integrate in exact offsets u,
  // so neither the factored exponent u (u + 2|m|) nor the linear moment
  // factor (anchor value plus alpha u) suffers cancellation
  const bool lo_anchor = std::abs(lo) < std::abs(hi);
  const double m = lo_anchor ? lo : hi;
  const double L = hi - lo;
  const double kappa = alpha * m + beta;
  const double slope = lo_anchor ? alpha : -alpha;
  auto f = [kappa, slope, m](double u) {
    const double dq = u * (u + 2.0 * std::abs(m));
    if (dq > 745.0) return 0.0;
    return (kappa + slope * u) * std::exp(-dq);
  };
  std::vector<double> seeds;
  for (double o = 0.25 / (1.0 + std::abs(m)); o < L; o *= 2.0) seeds.push_back(o);
  r.exponent = -m * m;
  r.gk = gk_adaptive(f, 0.0, L, rel_tol, abs_tol, 4000, seeds);
  return r;
}

ShiftedMoment gauss_moment_upper(double alpha, double beta, double U, double rel_tol,
                                 double abs_tol) {
  // integrate in offsets o = w - U0 via o = tan(pi r / 2); with the shift
  // m = max(U0, 0) the exponent is o (o + 2 U0) + (U0^2 - m^2), assembled
  // without ever reconstructing w - m
  const double U0 = std::max(U, -28.0);
  const double m = std::max(U0, 0.0);
  const double base = U0 * U0 - m * m; // 0 when U0 >= 0
  const double kappa = alpha * U0 + beta;
  auto h = [&](double r) {
    const double tn = std::tan(1.5707963267948966 * r);
    const double dq = tn * (tn + 2.0 * U0) + base;
    if (dq > 745.0) return 0.0;
    return (kappa + alpha * tn) * std::exp(-dq) * 1.5707963267948966 * (1.0 + tn * tn);
  };
  const double scale = 1.0 / (1.0 + std::abs(m));
  std::vector<double> seeds;
  for (double o = 0.25 * scale; o < 28.0 - std::min(U0, 28.0) + 2.0; o *= 2.0)
    seeds.push_back(std::atan(o) / 1.5707963267948966);
  ShiftedMoment r;
  r.exponent = -m * m;
  r.gk = gk_adaptive(h, 0.0, 1.0, rel_tol, abs_tol, 4000, seeds);
  return r;
}

ShiftedMoment gauss_moment_lower(double alpha, double beta, double U, double rel_tol,
                                 double abs_tol) {
  // \int_{-inf}^U (alpha w + beta) e^{-w^2} dw reflected around the origin
  return gauss_moment_upper(-alpha, beta, -U, rel_tol, abs_tol);
}

struct Piece {
  GKResult integral;
  double coeff;    // sign-carrying multiplier
  double exponent; // additional exp() factor, kept symbolic
};

QuadratureResult combine(const std::vector<Piece>& pieces) {
  std::vector<LogScaled> vals, errs;
  int subdivisions = 0;
  for (const auto& pc : pieces) {
    subdivisions += pc.integral.panels;
    if (pc.coeff == 0.0) continue;
    vals.push_back(LogScaled::from_double(pc.coeff * pc.integral.value) *
                   LogScaled::scaled(1.0, pc.exponent));
    errs.push_back(LogScaled::scaled(std::abs(pc.coeff) * pc.integral.abs_error, pc.exponent));
  }
  QuadratureResult out;
  out.subdivisions = subdivisions;
  out.log_value = log_sum(std::span<const LogScaled>(vals.data(), vals.size()));
  const LogScaled err = log_sum(std::span<const LogScaled>(errs.data(), errs.size()));
  out.rel_error_estimate =
      out.log_value.is_zero()
          ? (err.is_zero() ? 0.0 : std::numeric_limits<double>::infinity())
          : std::exp(std::min(err.log_abs - out.log_value.log_abs, 700.0));
  if (out.log_value.is_zero()) {
    out.value = 0.0;
    out.abs_error_estimate = err.is_zero() ? 0.0 : err.to_double();
  } else if (out.log_value.log_abs > 709.0) {
    out.value = out.log_value.sign * std::numeric_limits<double>::infinity();
    out.abs_error_estimate = std::numeric_limits<double>::infinity();
  } else {
    out.value = out.log_value.to_double();
    out.abs_error_estimate = out.rel_error_estimate * std::abs(out.value);
  }
  return out;
}

} // namespace

QuadratureResult v_quad(const ProblemParams& p, double x, double t, double eps, double tol) {
  if (!(t > 0.0) || !(eps > 0.0) || !(tol > 0.0))
    throw validation_error("v_quad: t, eps, tol must be positive");
  const double s = std::sqrt(2.0 * t * eps);
  const double za = (x - p.a) / s;
  const double zb = (x - p.b) / s;
  const double zp = (x - p.a - p.u_a * t) / s;
  const double d_pa = p.u_a * (p.u_a * t - 2.0 * (x - p.a)) / (2.0 * eps);
  const double rel = tol / 4.0;
  // (1/sqrt(pi)) [ e^{d_pa} \int_{-inf}^{-zp} + \int_{-za}^{-zb} + e^{-u_b/eps} \int_{-zb}^{inf} ]
  const ShiftedMoment m1 = gauss_moment_lower(0.0, 1.0, -zp, rel, 1e-300);
  const ShiftedMoment m2 = gauss_moment_window(0.0, 1.0, -za, -zb, rel, 1e-300);
  const ShiftedMoment m3 = gauss_moment_upper(0.0, 1.0, -zb, rel, 1e-300);
  std::vector<Piece> pieces;
  pieces.push_back({m1.gk, 1.0 / kSqrtPi, d_pa + m1.exponent});
  pieces.push_back({m2.gk, 1.0 / kSqrtPi, m2.exponent});
  pieces.push_back({m3.gk, 1.0 / kSqrtPi, -p.u_b / eps + m3.exponent});
  return combine(pieces);
}

QuadratureResult s_quad(const ProblemParams& p, double x, double t, double eps, double tol) {
  if (!(t > 0.0) || !(eps > 0.0) || !(tol > 0.0))
    throw validation_error("s_quad: t, eps, tol must be positive");
  const double s = std::sqrt(2.0 * t * eps);
  const double za = (x - p.a) / s;
  const double zc = (x - p.c) / s;
  const double zd = (x - p.d) / s;
  const double zp = (x - p.a - p.u_a * t) / s;
  const double d_pa = p.u_a * (p.u_a * t - 2.0 * (x - p.a)) / (2.0 * eps);
  const double rel = tol / 4.0;
  // y < a with the exponential tilt: substitute w = (y - x + u_a t)/s, so
  // y - c = s w + (x - u_a t - c) and the tilt becomes the e^{d_pa} prefactor.
  const ShiftedMoment m1 = gauss_moment_lower(s, x - p.u_a * t - p.c, -zp, rel, 1e-300);
  // a < y < c: w = (y - x)/s.
  const ShiftedMoment m2 = gauss_moment_window(s, x - p.c, -za, -zc, rel, 1e-300);
  // y > d carries the flat rho_d e^{-u_b/eps} datum.
  const ShiftedMoment m3 = gauss_moment_upper(0.0, 1.0, -zd, rel, 1e-300);
  std::vector<Piece> pieces;
  pieces.push_back({m1.gk, p.rho_c / kSqrtPi, d_pa + m1.exponent});
  pieces.push_back({m2.gk, p.rho_c / kSqrtPi, m2.exponent});
  pieces.push_back({m3.gk, p.rho_d / kSqrtPi, -p.u_b / eps + m3.exponent});
  return combine(pieces);
}

} // namespace adhesion

#include "adhesion/viscous.hpp"

#include <cmath>
#include <vector>

#include "adhesion/gauss_erfc.hpp"

namespace adhesion {

namespace {

// Signed similarity coordinates (x - station) / sqrt(2 t eps) plus the
// exponent differences that control term dominance. d_pa is assembled from
// the factored form u_a (u_a t - 2(x-a)) / (2 eps), not from the squares,
// so it carries no cancellation for small eps.
struct Coords {
  double s;  // sqrt(2 t eps)
  double za, zb, zc, zd, zp;
  double d_pa;    // zp^2 - za^2
  double w_b;     // u_b / eps
  double log1mew; // log|1 - e^{-u_b/eps}|, sign in sign1mew
  int sign1mew;
};

Coords make_coords(const ProblemParams& p, double x, double t, double eps) {
  if (!(t > 0.0)) throw validation_error("viscous evaluation requires t > 0");
  if (!(eps > 0.0)) throw validation_error("viscous evaluation requires eps > 0");
  Coords k;
  k.s = std::sqrt(2.0 * t * eps);
  k.za = (x - p.a) / k.s;
  k.zb = (x - p.b) / k.s;
  k.zc = (x - p.c) / k.s;
  k.zd = (x - p.d) / k.s;
  k.zp = (x - p.a - p.u_a * t) / k.s;
  k.d_pa = p.u_a * (p.u_a * t - 2.0 * (x - p.a)) / (2.0 * eps);
  k.w_b = p.u_b / eps;
  if (k.w_b > 0.0) {
    k.log1mew = std::log(-std::expm1(-k.w_b));
    k.sign1mew = 1;
  } else {
    // 1 - e^{|w|} = -(e^{|w|} - 1)
    k.log1mew = -k.w_b + std::log(-std::expm1(k.w_b));
    k.sign1mew = -1;
  }
  return k;
}

// Gaussian tail erfc(u) for u >= 0 in log form: O(1) mantissa, exponent -u^2.
LogScaled tail(double u) { return {std::log(erfcx_gauss(u)) - u * u, 1}; }

// coeff * \int_{z_lo}^{z_hi} e^{-s^2} ds = coeff (erfc(z_lo) - erfc(z_hi)),
// z_lo <= z_hi, emitted as tail-form terms so that nothing is represented as
// sqrt(pi) minus an invisible remainder. This is the same sign-resolved
// regrouping the region-wise formulas use.
void add_erfc_window(std::vector<LogScaled>& terms, const LogScaled& coeff, double z_lo,
                     double z_hi) {
  if (coeff.is_zero()) return;
  if (z_lo >= 0.0) {
    terms.push_back(coeff * tail(z_lo));
    terms.push_back(-(coeff * tail(z_hi)));
  } else if (z_hi <= 0.0) {
    terms.push_back(coeff * tail(-z_hi));
    terms.push_back(-(coeff * tail(-z_lo)));
  } else {
    terms.push_back(coeff * LogScaled::from_double(kSqrtPi));
    terms.push_back(-(coeff * tail(-z_lo)));
    terms.push_back(-(coeff * tail(z_hi)));
  }
}

// erfc(zp) e^{zp^2 - za^2}: for zp >= 0 the exponents collapse to -za^2
// exactly; for zp < 0 the mantissa is O(1) and the factored d_pa survives.
LogScaled front_wave(const Coords& k) {
  if (k.zp >= 0.0) return {std::log(erfcx_gauss(k.zp)) - k.za * k.za, 1};
  return {std::log(kSqrtPi - erfc_gauss(-k.zp)) + k.d_pa, 1};
}

// Shared denominator sqrt(pi) V:
//   erfc(zp) e^{zp^2-za^2} + (erfc(zb) - erfc(za)) + erfc(-zb) e^{-u_b/eps}.
LogScaled denom_log(const Coords& k) {
  std::vector<LogScaled> terms;
  terms.reserve(6);
  terms.push_back(front_wave(k));
  add_erfc_window(terms, LogScaled::from_double(1.0), k.zb, k.za);
  // erfc(-zb) e^{-w_b}
  if (k.zb <= 0.0)
    terms.push_back(tail(-k.zb) * LogScaled::scaled(1.0, -k.w_b));
  else
    terms.push_back(LogScaled::from_double(kSqrtPi - erfc_gauss(k.zb)) *
                    LogScaled::scaled(1.0, -k.w_b));
  return log_sum(std::span<const LogScaled>(terms.data(), terms.size()));
}

// sqrt(pi) S, i.e. the R numerator:
//   - sqrt(t eps / 2) rho_c e^{-zc^2}
// + rho_c (x - c - u_a t) erfc(zp) e^{zp^2-za^2}
// + rho_c (x - c) (erfc(zc) - erfc(za))
// + rho_d erfc(-zd) e^{-u_b/eps}
// The first line is the combined Gaussian-moment contribution of the two
// initial ramp pieces: \int_{-inf}^{-zp} w e^{-w^2} dw = -e^{-zp^2}/2, so the
// e^{-za^2} moments of the tilted and untilted ramps cancel exactly and only
// the -e^{-zc^2}/2 moment survives.
LogScaled r_numer_log(const ProblemParams& p, const Coords& k, double x, double t, double eps) {
  std::vector<LogScaled> terms;
  terms.reserve(8);
  const double g = std::sqrt(t * eps / 2.0);
  terms.push_back(LogScaled::scaled(-p.rho_c * g, -k.zc * k.zc));
  terms.push_back(LogScaled::from_double(p.rho_c * (x - p.c - p.u_a * t)) * front_wave(k));
  add_erfc_window(terms, LogScaled::from_double(p.rho_c * (x - p.c)), k.zc, k.za);
  if (k.zd <= 0.0)
    terms.push_back(LogScaled::from_double(p.rho_d) * tail(-k.zd) *
                    LogScaled::scaled(1.0, -k.w_b));
  else
    terms.push_back(LogScaled::from_double(p.rho_d * (kSqrtPi - erfc_gauss(k.zd))) *
                    LogScaled::scaled(1.0, -k.w_b));
  return log_sum(std::span<const LogScaled>(terms.data(), terms.size()));
}

// u numerator: u_a erfc(zp) e^{zp^2-za^2} + sqrt(eps/(2t)) e^{-zb^2} (1 - e^{-u_b/eps}).
LogScaled u_numer_log(const ProblemParams& p, const Coords& k, double t, double eps) {
  const LogScaled n1 = LogScaled::from_double(p.u_a) * front_wave(k);
  const double c2 = std::sqrt(eps / (2.0 * t));
  const LogScaled n2{std::log(c2) - k.zb * k.zb + k.log1mew, k.sign1mew};
  return log_sum({n1, n2});
}

bool on_station(const ProblemParams& p, double x, double t) {
  return x == p.a || x == p.b || x == p.c || x == p.d || x == p.a + p.u_a * t;
}

double require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw numerics_error(std::string(what) + ": intermediate left double range");
  return v;
}

} // namespace

LogScaled v_eps_log(const ProblemParams& p, double x, double t, double eps) {
  const Coords k = make_coords(p, x, t, eps);
  return denom_log(k) * LogScaled::from_double(1.0 / kSqrtPi);
}

double v_eps(const ProblemParams& p, double x, double t, double eps) {
  return v_eps_log(p, x, t, eps).to_double();
}

LogScaled s_eps_log(const ProblemParams& p, double x, double t, double eps) {
  const Coords k = make_coords(p, x, t, eps);
  return r_numer_log(p, k, x, t, eps) * LogScaled::from_double(1.0 / kSqrtPi);
}

double s_eps(const ProblemParams& p, double x, double t, double eps) {
  return s_eps_log(p, x, t, eps).to_double();
}

TaggedValue u_eps_stable(const ProblemParams& p, double x, double t, double eps) {
  const Coords k = make_coords(p, x, t, eps);
  const double stable = (u_numer_log(p, k, t, eps) / denom_log(k)).to_double();
  if (!on_station(p, x, t)) return {stable, false};
  try {
    return {u_eps_naive(p, x, t, eps), true};
  } catch (const numerics_error&) {
    return {stable, true};
  }
}

TaggedValue r_eps_stable(const ProblemParams& p, double x, double t, double eps) {
  const Coords k = make_coords(p, x, t, eps);
  const LogScaled num = r_numer_log(p, k, x, t, eps);
  const LogScaled den = denom_log(k);
  const double stable = num.is_zero() ? 0.0 : (num / den).to_double();
  if (!on_station(p, x, t)) return {stable, false};
  try {
    return {r_eps_naive(p, x, t, eps), true};
  } catch (const numerics_error&) {
    return {stable, true};
  }
}

double u_eps_naive(const ProblemParams& p, double x, double t, double eps) {
  const Coords k = make_coords(p, x, t, eps);
  const double e_pa = require_finite(std::exp(k.d_pa), "u_eps_naive");
  const double e_ub = require_finite(std::exp(-k.w_b), "u_eps_naive");
  const double den = require_finite(
      erfc_gauss(k.zp) * e_pa + erfc_gauss(k.zb) - erfc_gauss(k.za) + erfc_gauss(-k.zb) * e_ub,
      "u_eps_naive");
  const double num = require_finite(
      p.u_a * erfc_gauss(k.zp) * e_pa +
          std::sqrt(eps / (2.0 * t)) * std::exp(-k.zb * k.zb) * (1.0 - e_ub),
      "u_eps_naive");
  if (den == 0.0) throw numerics_error("u_eps_naive: denominator underflowed to zero");
  return require_finite(num / den, "u_eps_naive");
}

double r_eps_naive(const ProblemParams& p, double x, double t, double eps) {
  const Coords k = make_coords(p, x, t, eps);
  const double g = std::sqrt(t * eps / 2.0);
  const double e_pa = require_finite(std::exp(k.d_pa), "r_eps_naive");
  const double e_ub = require_finite(std::exp(-k.w_b), "r_eps_naive");
  const double den = require_finite(
      erfc_gauss(k.zp) * e_pa + erfc_gauss(k.zb) - erfc_gauss(k.za) + erfc_gauss(-k.zb) * e_ub,
      "r_eps_naive");
  const double num = require_finite(
      p.rho_c * (-g * std::exp(-k.zc * k.zc) +
                 (x - p.c - p.u_a * t) * erfc_gauss(k.zp) * e_pa +
                 (x - p.c) * (erfc_gauss(k.zc) - erfc_gauss(k.za))) +
          p.rho_d * erfc_gauss(-k.zd) * e_ub,
      "r_eps_naive");
  if (den == 0.0) throw numerics_error("r_eps_naive: denominator underflowed to zero");
  return require_finite(num / den, "r_eps_naive");
}

double rho_eps_fd(const ProblemParams& p, double x, double t, double eps) {
  const double h = std::sqrt(2.2e-16) * std::max(1.0, std::abs(x));
  const double rp = r_eps_stable(p, x + h, t, eps).value;
  const double rm = r_eps_stable(p, x - h, t, eps).value;
  return (rp - rm) / (2.0 * h);
}

} // namespace adhesion

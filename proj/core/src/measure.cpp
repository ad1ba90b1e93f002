#include "adhesion/measure.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "adhesion/quadrature.hpp"

namespace adhesion {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double bump_profile(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s * s));
}

double bump_profile_d(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return bump_profile(s) * (-2.0 * s / (q * q));
}

} // namespace

double Bump::value(double x, double t) const {
  return bump_profile((x - x0) / wx) * bump_profile((t - t0) / wt);
}
double Bump::dx(double x, double t) const {
  return bump_profile_d((x - x0) / wx) / wx * bump_profile((t - t0) / wt);
}
double Bump::dt(double x, double t) const {
  return bump_profile((x - x0) / wx) * bump_profile_d((t - t0) / wt) / wt;
}
std::string Bump::descriptor() const {
  std::ostringstream os;
  os << "bump(x0=" << x0 << ",wx=" << wx << ",t0=" << t0 << ",wt=" << wt << ")";
  return os.str();
}

double ac_density(const ProblemParams& p, const AcPiece& piece, double x, double t) {
  if (x <= piece.lo || x >= piece.hi) return 0.0;
  switch (piece.kind) {
    case AcPiece::Density::Flat: return p.rho_c;
    case AcPiece::Density::WedgeSlope:
      return p.rho_c * (4.0 * (x - p.a) / (p.u_a * t) - 2.0);
  }
  return 0.0;
}

Measure1D rho_measure(const ProblemParams& p, const CurveSet& cs, double t, MeasureMode mode) {
  if (!(t > 0.0)) throw validation_error("rho_measure: t must be positive");
  Measure1D m;
  m.t = t;
  auto ac = [&](double lo, double hi, AcPiece::Density k) {
    if (lo < hi) m.ac.push_back({lo, hi, k});
  };
  auto atom = [&](double x, double w, const std::string& carrier) {
    m.atoms.push_back({x, w, carrier});
  };

  switch (cs.sign_case.case_id) {
    case CaseId::Case1: {
      const double rr = cs.at("r").eval(t);
      const double gd = cs.at("gamma_d").eval(t);
      ac(-kInf, rr, AcPiece::Density::Flat);
      if (mode == MeasureMode::Verbatim)
        ac(rr, p.a, AcPiece::Density::WedgeSlope); // displayed fan density
      // corrected: the fan is vacuum, R constant across it, no atoms at r or a
      ac(p.a, p.c, AcPiece::Density::Flat);
      atom(gd, p.rho_d, "gamma_d");
      break;
    }
    case CaseId::Case2:
    case CaseId::Case3: {
      const double ga = cs.at("gamma_a").eval(t);
      const double gc = cs.at("gamma_c").eval(t);
      const double gd = cs.at("gamma_d").eval(t);
      ac(-kInf, gc, AcPiece::Density::Flat);
      atom(gc, p.rho_c * (p.c - gc), "gamma_c");
      atom(ga, p.rho_c * p.u_a * t, "gamma_a");
      atom(gd, p.rho_d, "gamma_d");
      break;
    }
    case CaseId::Case4: {
      const double g1 = cs.at("gamma_a1").eval(t);
      const double g2 = cs.at("gamma_a2").eval(t);
      const double gc = cs.at("gamma_c").eval(t);
      ac(-kInf, g1, AcPiece::Density::Flat);
      ac(g2, gc, AcPiece::Density::Flat);
      if (mode == MeasureMode::Corrected) {
        // fan is vacuum; atom weights are the jumps of R across each carrier
        atom(g1, p.rho_c * (p.a + p.u_a * t - g1), "gamma_a1");
        atom(g2, p.rho_c * (g2 - p.a), "gamma_a2");
        atom(gc, p.rho_c * (p.c - gc), "gamma_c");
      } else {
        // displayed fan density and weight expressions, no gamma_c atom
        ac(g1, g2, AcPiece::Density::WedgeSlope);
        atom(g1,
             p.rho_c * (2.0 * (p.c - p.a) + p.u_a * t + gc - g1 - 2.0 -
                        2.0 * (g1 - p.a) * (g1 - p.a) / (p.u_a * t)),
             "gamma_a1");
        atom(g2,
             p.rho_c * (2.0 * (g2 - p.a) + p.c - gc - 2.0 -
                        2.0 * (g2 - p.a) * (g2 - p.a) / (p.u_a * t)),
             "gamma_a2");
      }
      atom(p.d, p.rho_d, "gamma_d");
      break;
    }
  }
  return m;
}

double pair_measure(const ProblemParams& p, const Measure1D& m, const Bump& phi, double t,
                    double tol) {
  return pair_measure_fn(
      p, m, [&](double x) { return phi.value(x, t); }, phi.x_lo(), phi.x_hi(), t, tol);
}

double pair_measure_fn(const ProblemParams& p, const Measure1D& m,
                       const std::function<double(double)>& phi, double x_lo, double x_hi,
                       double t, double tol) {
  double acc = 0.0;
  for (const auto& piece : m.ac) {
    const double lo = std::max(piece.lo, x_lo);
    const double hi = std::min(piece.hi, x_hi);
    if (!(hi > lo)) continue;
    acc += gk_integrate([&](double x) { return ac_density(p, piece, x, t) * phi(x); }, lo, hi,
                        tol, 1e-14)
               .value;
  }
  for (const auto& at : m.atoms)
    if (at.x > x_lo && at.x < x_hi) acc += at.weight * phi(at.x);
  return acc;
}

} // namespace adhesion

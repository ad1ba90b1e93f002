#include "adhesion/limit.hpp"

#include <algorithm>
#include <cmath>

namespace adhesion {

namespace {

struct CurveVals {
  double r = 0, p = 0, q = 0, l = 0, lt = 0;
  double ga = 0, gb = 0, gc = 0, gd = 0, ga1 = 0, ga2 = 0;
  bool has_q = false;
};

CurveVals eval_curves(const CurveSet& cs, double t) {
  CurveVals v;
  auto get = [&](const char* lbl, double& slot, bool* flag = nullptr) {
    if (const Curve* c = cs.find(lbl)) {
      slot = c->eval(t);
      if (flag) *flag = true;
    }
  };
  get("r", v.r);
  get("p", v.p);
  get("q", v.q, &v.has_q);
  get("l", v.l);
  get("l_tilde", v.lt);
  get("gamma_a", v.ga);
  get("gamma_b", v.gb);
  get("gamma_c", v.gc);
  get("gamma_d", v.gd);
  get("gamma_a1", v.ga1);
  get("gamma_a2", v.ga2);
  return v;
}

bool between(double lo, double x, double hi) { return lo < x && x < hi; }
double min3(double a, double b, double c) { return std::min(a, std::min(b, c)); }

} // namespace

std::vector<UKind> u_region_claims(const ProblemParams& p, const CurveSet& cs, double x,
                                   double t) {
  const CurveVals w = eval_curves(cs, t);
  const SignCase& sc = cs.sign_case;
  const double a = p.a, b = p.b;
  std::vector<UKind> claims;
  auto claim = [&](bool cond, UKind k) {
    if (cond) claims.push_back(k);
  };
  switch (sc.case_id) {
    case CaseId::Case1:
      claim(x < w.r, UKind::LeftConstant);
      claim(between(w.r, x, a), UKind::RarefactionA);
      claim(between(a, x, b) || x > w.p, UKind::Zero);
      claim(between(b, x, w.p), UKind::JetB);
      break;

    case CaseId::Case2: {
      const bool mid = between(a, x, b);
      const bool right = x > b;
      claim(x < a || (mid && x < w.lt) ||
                (right && (x < min3(w.p, w.q, w.r) || between(w.p, x, min3(w.l, w.q, w.r)))),
            UKind::LeftConstant);
      claim(right && (between(w.r, x, w.p) || between(w.q, x, std::min(w.p, w.r))),
            UKind::JetB);
      claim((mid && x > w.lt) ||
                (right && (x > std::max(w.p, w.r) || between(std::max(w.p, w.q), x, w.r) ||
                           between(std::max(w.l, w.p), x, std::min(w.q, w.r)))),
            UKind::Zero);
      break;
    }

    case CaseId::Case3: {
      const bool left = x < a;
      const bool mid = between(a, x, b);
      const bool right = x > b;
      claim((left && x < w.q) ||
                (mid && x < std::min(w.q, w.r) && (x < std::min(w.lt, w.p) || x > w.p)) ||
                (right && x < std::min(w.l, w.r)),
            UKind::LeftConstant);
      claim((left && x > w.q) ||
                (mid && (between(std::max(w.p, w.q), x, w.r) || x > std::max(w.p, w.r))),
            UKind::JetB);
      claim((mid && (between(w.r, x, w.p) ||
                     (x < std::min(w.p, w.r) && (between(w.lt, x, w.q) || x > w.q)))) ||
                (right && (between(w.l, x, w.r) || x > w.r)),
            UKind::Zero);
      break;
    }

    case CaseId::Case4: {
      const bool left = x < a;
      const bool mid = between(a, x, b);
      const bool q_exists = sc.subcase == Subcase::Case4_Greater;
      claim(left && (q_exists ? x < std::min(w.q, w.r) : x < w.r), UKind::LeftConstant);
      claim(left && between(w.r, x, w.l), UKind::RarefactionA);
      claim((left && (x > std::max(w.l, w.r) || (q_exists && between(w.q, x, w.r)))) ||
                (mid && x > w.p),
            UKind::JetB);
      claim((mid && x < w.p) || x > b, UKind::Zero);
      break;
    }
  }
  return claims;
}

std::vector<RKind> R_region_claims(const ProblemParams& p, const CurveSet& cs, double x,
                                   double t) {
  const CurveVals w = eval_curves(cs, t);
  std::vector<RKind> claims;
  auto claim = [&](bool cond, RKind k) {
    if (cond) claims.push_back(k);
  };
  switch (cs.sign_case.case_id) {
    case CaseId::Case1:
      claim(x < w.r, RKind::AdvectedRamp);
      claim(between(w.r, x, p.a), RKind::FanPlateau);
      claim(between(p.a, x, p.c), RKind::SteadyRamp);
      claim(between(p.c, x, p.d) || between(p.d, x, w.p), RKind::Zero);
      claim(x > std::max(p.d, w.p), RKind::RightPlateau);
      break;
    case CaseId::Case2:
    case CaseId::Case3:
      claim(x < w.ga, RKind::AdvectedRamp);
      claim(between(w.ga, x, w.gc), RKind::SteadyRamp);
      claim(between(w.gc, x, w.gb) || between(w.gb, x, w.gd), RKind::Zero);
      claim(x > w.gd, RKind::RightPlateau);
      break;
    case CaseId::Case4:
      claim(x < w.ga1, RKind::AdvectedRamp);
      claim(between(w.ga1, x, w.ga2), RKind::FanPlateau);
      claim(between(w.ga2, x, w.gc), RKind::SteadyRamp);
      claim(between(w.gc, x, w.gd), RKind::Zero);
      claim(x > w.gd, RKind::RightPlateau);
      break;
  }
  return claims;
}

namespace {

bool on_any_boundary(const ProblemParams& p, const CurveSet& cs, double x, double t) {
  if (x == p.a || x == p.b || x == p.c || x == p.d) return true;
  for (const auto& c : cs.curves)
    if (x == c.eval(t)) return true;
  return false;
}

} // namespace

std::string label_of(UKind k) {
  switch (k) {
    case UKind::LeftConstant: return "left-constant";
    case UKind::RarefactionA: return "rarefaction-a";
    case UKind::JetB: return "jet-b";
    case UKind::Zero: return "zero";
  }
  return "?";
}

std::string label_of(RKind k) {
  switch (k) {
    case RKind::AdvectedRamp: return "advected-ramp";
    case RKind::FanPlateau: return "fan-plateau";
    case RKind::SteadyRamp: return "steady-ramp";
    case RKind::Zero: return "zero";
    case RKind::RightPlateau: return "right-plateau";
  }
  return "?";
}

double u_value(const ProblemParams& p, UKind k, double x, double t) {
  switch (k) {
    case UKind::LeftConstant: return p.u_a;
    case UKind::RarefactionA: return (x - p.a) / t;
    case UKind::JetB: return (x - p.b) / t;
    case UKind::Zero: return 0.0;
  }
  return 0.0;
}

double R_value(const ProblemParams& p, RKind k, double x, double t) {
  switch (k) {
    case RKind::AdvectedRamp: return p.rho_c * (x - p.c - p.u_a * t);
    case RKind::FanPlateau:
      // the fan empties: R holds the matching constant, the density is 0
      return p.rho_c * (p.a - p.c);
    case RKind::SteadyRamp: return p.rho_c * (x - p.c);
    case RKind::Zero: return 0.0;
    case RKind::RightPlateau: return p.rho_d;
  }
  return 0.0;
}

LimitValue u_limit(const ProblemParams& p, const CurveSet& cs, double x, double t) {
  if (!(t > 0.0)) throw validation_error("u_limit: t must be positive");
  if (on_any_boundary(p, cs, x, t)) return {0.0, kBoundaryLabel, true};
  const auto claims = u_region_claims(p, cs, x, t);
  if (claims.size() != 1) return {0.0, kBoundaryLabel, true};
  return {u_value(p, claims[0], x, t), label_of(claims[0]), false};
}

LimitValue R_limit(const ProblemParams& p, const CurveSet& cs, double x, double t) {
  if (!(t > 0.0)) throw validation_error("R_limit: t must be positive");
  if (on_any_boundary(p, cs, x, t)) return {0.0, kBoundaryLabel, true};
  const auto claims = R_region_claims(p, cs, x, t);
  if (claims.size() != 1) return {0.0, kBoundaryLabel, true};
  return {R_value(p, claims[0], x, t), label_of(claims[0]), false};
}

std::vector<RegionSeg> regions_at(const ProblemParams& p, const CurveSet& cs, double t,
                                  double x_lo, double x_hi) {
  std::vector<double> cuts = {x_lo, x_hi, p.a, p.b, p.c, p.d};
  for (const auto& c : cs.curves) cuts.push_back(c.eval(t));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<RegionSeg> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double clo = std::max(cuts[i], x_lo), chi = std::min(cuts[i + 1], x_hi);
    if (!(chi > clo)) continue;
    const double mid = 0.5 * (clo + chi);
    const auto uc = u_region_claims(p, cs, mid, t);
    const auto rc = R_region_claims(p, cs, mid, t);
    if (uc.size() != 1 || rc.size() != 1) continue;
    out.push_back({clo, chi, uc[0], rc[0]});
  }
  return out;
}

} // namespace adhesion

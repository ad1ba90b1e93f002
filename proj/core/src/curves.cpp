#include "adhesion/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adhesion {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CurvePiece piece_const(double x, double lo, double hi) {
  return {CurvePiece::Kind::Const, lo, hi, x, 0.0, 0.0};
}
CurvePiece piece_line(double x0, double slope, double lo, double hi) {
  return {CurvePiece::Kind::Line, lo, hi, x0, slope, 0.0};
}
CurvePiece piece_sqrt(double base, double dir, double g, double lo, double hi) {
  return {CurvePiece::Kind::Sqrt, lo, hi, base, dir, g};
}
CurvePiece piece_linesqrt(double base, double slope, double g, double lo, double hi) {
  return {CurvePiece::Kind::LineSqrt, lo, hi, base, slope, g};
}

// Roots of piece(t) == X inside the piece's span, ascending.
std::vector<double> piece_hits(const CurvePiece& pc, double X) {
  std::vector<double> out;
  auto in_span = [&](double t) {
    const double slack = 1e-12 * (1.0 + std::abs(t));
    return t >= pc.t_lo - slack && t <= pc.t_hi + slack;
  };
  auto push = [&](double t) {
    if (!std::isfinite(t) || t < 0.0) return;
    if (in_span(t)) out.push_back(std::min(std::max(t, pc.t_lo), pc.t_hi));
  };
  switch (pc.kind) {
    case CurvePiece::Kind::Const:
      if (pc.c0 == X) push(pc.t_lo);
      break;
    case CurvePiece::Kind::Line:
      if (pc.c1 != 0.0) push((X - pc.c0) / pc.c1);
      break;
    case CurvePiece::Kind::Sqrt: {
      const double u = (X - pc.c0) / pc.c1;
      if (u >= 0.0) push(u * u / pc.c2);
      break;
    }
    case CurvePiece::Kind::LineSqrt: {
      // c1 tau^2 - sqrt(c2) tau + (c0 - X) = 0, tau = sqrt(t)
      const double A = pc.c1, B = -std::sqrt(pc.c2), C = pc.c0 - X;
      const double disc = B * B - 4.0 * A * C;
      if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        for (double tau : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)})
          if (tau >= 0.0) push(tau * tau);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First time the piece chain reaches X (chain need not be monotone).
std::optional<double> first_hit(const std::vector<CurvePiece>& chain, double X) {
  for (const auto& pc : chain) {
    auto hits = piece_hits(pc, X);
    if (!hits.empty()) return hits.front();
  }
  return std::nullopt;
}

std::vector<CurvePiece> clip_from(const std::vector<CurvePiece>& chain, double t0) {
  std::vector<CurvePiece> out;
  for (const auto& pc : chain) {
    if (pc.t_hi <= t0) continue;
    CurvePiece q = pc;
    q.t_lo = std::max(pc.t_lo, t0);
    out.push_back(q);
  }
  return out;
}

// Frozen station X until the chain first reaches it, then the chain.
Curve attach(const std::string& label, double X, const std::vector<CurvePiece>& chain,
             std::vector<std::string>& notes) {
  Curve c;
  c.label = label;
  auto t0 = first_hit(chain, X);
  if (!t0) {
    notes.push_back(label + ": carrier chain never reaches x=" + std::to_string(X) +
                    "; curve stays frozen");
    c.pieces = {piece_const(X, 0.0, kInf)};
    return c;
  }
  c.pieces = {piece_const(X, 0.0, *t0)};
  for (auto& pc : clip_from(chain, *t0)) c.pieces.push_back(pc);
  return c;
}

Curve make_curve(const std::string& label, std::vector<CurvePiece> pieces) {
  return Curve{label, std::move(pieces)};
}

} // namespace

double CurvePiece::eval(double t) const {
  switch (kind) {
    case Kind::Const: return c0;
    case Kind::Line: return c0 + c1 * t;
    case Kind::Sqrt: return c0 + c1 * std::sqrt(c2 * t);
    case Kind::LineSqrt: return c0 + c1 * t - std::sqrt(c2 * t);
  }
  return c0;
}

double Curve::eval(double t) const {
  for (const auto& pc : pieces)
    if (t <= pc.t_hi) return pc.eval(t);
  return pieces.back().eval(t);
}

std::vector<double> Curve::breakpoints() const {
  std::vector<double> out;
  for (size_t i = 0; i + 1 < pieces.size(); ++i) out.push_back(pieces[i].t_hi);
  return out;
}

const Curve* CurveSet::find(const std::string& label) const {
  for (const auto& c : curves)
    if (c.label == label) return &c;
  return nullptr;
}

const Curve& CurveSet::at(const std::string& label) const {
  const Curve* c = find(label);
  if (!c) throw validation_error("CurveSet: no curve labeled " + label);
  return *c;
}

CurveSet build_curves(const ProblemParams& p, const SignCase& sc) {
  CurveSet cs;
  cs.sign_case = sc;
  auto& notes = cs.completeness_notes;
  const double ba = p.b - p.a;

  auto record = [&cs](const std::string& name, const std::string& ca, const std::string& cb,
                      double t, double xa, double xb) {
    cs.intersections.push_back({name, ca, cb, t, xa, xb});
  };

  switch (sc.case_id) {
    case CaseId::Case1: {
      Curve r = make_curve("r", {piece_line(p.a, p.u_a, 0.0, kInf)});
      Curve pcv = make_curve("p", {piece_sqrt(p.b, +1.0, 2.0 * p.u_b, 0.0, kInf)});
      Curve gd = attach("gamma_d", p.d, pcv.pieces, notes);
      const double t_star = (p.d - p.b) * (p.d - p.b) / (2.0 * p.u_b);
      record("t_star", "p", "x=d", t_star, pcv.eval(t_star), p.d);
      cs.curves = {r, pcv, gd};
      break;
    }

    case CaseId::Case2: {
      Curve l = make_curve("l", {piece_line(p.a + p.u_b / p.u_a, p.u_a / 2.0, 0.0, kInf)});
      Curve lt = make_curve("l_tilde", {piece_line(p.a, p.u_a / 2.0, 0.0, kInf)});
      Curve r = make_curve("r", {piece_line(p.a, p.u_a, 0.0, kInf)});
      Curve pcv = make_curve("p", {piece_sqrt(p.b, +1.0, 2.0 * p.u_b, 0.0, kInf)});
      Curve q = make_curve("q", {piece_linesqrt(p.b, p.u_a, 2.0 * p.u_a * ba, 0.0, kInf)});

      const double t_g = 2.0 * ba / p.u_a; // q tangent to l_tilde at x = b
      const double t_pl =
          std::pow((std::sqrt(2.0 * p.u_b) + std::sqrt(2.0 * p.u_a * ba)) / p.u_a, 2);
      Curve ga = make_curve("gamma_a", {piece_line(p.a, p.u_a / 2.0, 0.0, t_g),
                                        piece_linesqrt(p.b, p.u_a, 2.0 * p.u_a * ba, t_g, t_pl),
                                        piece_line(p.a + p.u_b / p.u_a, p.u_a / 2.0, t_pl, kInf)});
      Curve gb = make_curve("gamma_b", {piece_sqrt(p.b, +1.0, 2.0 * p.u_b, 0.0, t_pl),
                                        piece_line(p.a + p.u_b / p.u_a, p.u_a / 2.0, t_pl, kInf)});
      Curve gc = attach("gamma_c", p.c, ga.pieces, notes);
      Curve gd = attach("gamma_d", p.d, gb.pieces, notes);

      record("t_pl", "p", "l", t_pl, pcv.eval(t_pl), l.eval(t_pl));
      record("t_q_ltilde", "q", "l_tilde", t_g, q.eval(t_g), lt.eval(t_g));
      const double t_star = (p.d - p.b) * (p.d - p.b) / (2.0 * p.u_b);
      record("t_star", "p", "x=d", t_star, pcv.eval(t_star), p.d);

      // Orderings assumed by the detailed rho recovery.
      const double tau_pr =
          (std::sqrt(2.0 * p.u_b) + std::sqrt(2.0 * p.u_b + 4.0 * p.u_a * ba)) / (2.0 * p.u_a);
      const double x_pr = p.a + p.u_a * tau_pr * tau_pr;
      const double x_pl = pcv.eval(t_pl);
      if (sc.subcase != Subcase::Case2_TwoUbBelow) {
        cs.complete = false;
        notes.push_back("rho recovery detailed only for 2u_b < u_a(b-a); curve network "
                        "extrapolated from the same construction");
      }
      if (!(x_pr < p.d && p.d < x_pl)) {
        cs.complete = false;
        notes.push_back("ordering x_pr < d < x_pl violated (x_pr=" + std::to_string(x_pr) +
                        ", x_pl=" + std::to_string(x_pl) + ")");
      }
      cs.curves = {l, lt, r, pcv, q, ga, gb, gc, gd};
      break;
    }

    case CaseId::Case3: {
      const double kap = p.u_a * ba - p.u_b; // > 0 for all of case 3
      Curve l = make_curve("l", {piece_line(p.a + p.u_b / p.u_a, p.u_a / 2.0, 0.0, kInf)});
      Curve lt = make_curve("l_tilde", {piece_line(p.a, p.u_a / 2.0, 0.0, kInf)});
      Curve r = make_curve("r", {piece_line(p.a, p.u_a, 0.0, kInf)});
      Curve pcv = make_curve("p", {piece_sqrt(p.b, -1.0, -2.0 * p.u_b, 0.0, kInf)});
      Curve q = make_curve("q", {piece_linesqrt(p.b, p.u_a, 2.0 * kap, 0.0, kInf)});

      // p, q and l_tilde concur; q is tangent to l later.
      const double t_triple =
          std::pow((std::sqrt(2.0 * kap) - std::sqrt(-2.0 * p.u_b)) / p.u_a, 2);
      const double t_ql = 2.0 * kap / (p.u_a * p.u_a);
      Curve ga = make_curve("gamma_a", {piece_line(p.a, p.u_a / 2.0, 0.0, t_triple),
                                        piece_linesqrt(p.b, p.u_a, 2.0 * kap, t_triple, t_ql),
                                        piece_line(p.a + p.u_b / p.u_a, p.u_a / 2.0, t_ql, kInf)});
      Curve gb = make_curve("gamma_b", {piece_sqrt(p.b, -1.0, -2.0 * p.u_b, 0.0, t_triple),
                                        piece_linesqrt(p.b, p.u_a, 2.0 * kap, t_triple, t_ql),
                                        piece_line(p.a + p.u_b / p.u_a, p.u_a / 2.0, t_ql, kInf)});

      // gamma_c attaches to whichever edge reaches the station first.
      auto hit_b = first_hit(gb.pieces, p.c);
      auto hit_a = first_hit(ga.pieces, p.c);
      Curve gc = (hit_a && (!hit_b || *hit_a < *hit_b)) ? attach("gamma_c", p.c, ga.pieces, notes)
                                                        : attach("gamma_c", p.c, gb.pieces, notes);
      if (hit_a && (!hit_b || *hit_a < *hit_b)) {
        cs.complete = false;
        notes.push_back("gamma_a reaches x=c before gamma_b; configuration outside the "
                        "detailed orderings");
      }
      Curve gd = attach("gamma_d", p.d, gb.pieces, notes);

      record("t_ql~", "q", "l_tilde", t_triple, q.eval(t_triple), lt.eval(t_triple));
      record("t_pq", "p", "q", t_triple, pcv.eval(t_triple), q.eval(t_triple));
      record("t_ql", "q", "l", t_ql, q.eval(t_ql), l.eval(t_ql));
      const double t_pc = (p.b - p.c) * (p.b - p.c) / (-2.0 * p.u_b);
      record("t_pc", "p", "x=c", t_pc, pcv.eval(t_pc), p.c);
      const double t_ld = 2.0 * (p.d - p.a - p.u_b / p.u_a) / p.u_a;
      record("t_ld", "l", "x=d", t_ld, l.eval(t_ld), p.d);

      const double tau_pr =
          (std::sqrt(4.0 * p.u_a * ba - 2.0 * p.u_b) - std::sqrt(-2.0 * p.u_b)) / (2.0 * p.u_a);
      const double x_pr = p.a + p.u_a * tau_pr * tau_pr;
      if (sc.subcase != Subcase::Case3_AbsUbBelow) {
        cs.complete = false;
        notes.push_back("rho recovery detailed only for |u_b| < u_a(b-a)");
      }
      if (!(p.c > x_pr)) {
        cs.complete = false;
        notes.push_back("ordering c > x_pr violated (x_pr=" + std::to_string(x_pr) + ")");
      }
      cs.curves = {l, lt, r, pcv, q, ga, gb, gc, gd};
      break;
    }

    case CaseId::Case4: {
      Curve r = make_curve("r", {piece_line(p.a, p.u_a, 0.0, kInf)});
      Curve pcv = make_curve("p", {piece_sqrt(p.b, -1.0, -2.0 * p.u_b, 0.0, kInf)});
      Curve l = make_curve("l", {piece_line((p.a + p.b) / 2.0, p.u_b / ba, 0.0, kInf)});
      const double t_al = ba * ba / (-2.0 * p.u_b); // l reaches a; p tangent to l there
      const double t_cp = (p.b - p.c) * (p.b - p.c) / (-2.0 * p.u_b);
      record("t_al", "l", "x=a", t_al, l.eval(t_al), p.a);
      record("t_cp", "p", "x=c", t_cp, pcv.eval(t_cp), p.c);

      Curve gd = make_curve("gamma_d", {piece_const(p.d, 0.0, kInf)});

      if (sc.subcase == Subcase::Case4_Greater) {
        const double kap = p.u_a * ba - p.u_b; // > 0 here
        Curve q = make_curve("q", {piece_linesqrt(p.b, p.u_a, 2.0 * kap, 0.0, kInf)});
        const double t_rq = ba * ba / (2.0 * kap); // r, l, q concur here
        Curve ga1 = make_curve("gamma_a1", {piece_line(p.a, p.u_a, 0.0, t_rq),
                                            piece_linesqrt(p.b, p.u_a, 2.0 * kap, t_rq, kInf)});
        Curve ga2 =
            make_curve("gamma_a2", {piece_const(p.a, 0.0, t_al),
                                    piece_line((p.a + p.b) / 2.0, p.u_b / ba, t_al, t_rq),
                                    piece_linesqrt(p.b, p.u_a, 2.0 * kap, t_rq, kInf)});
        std::vector<CurvePiece> chain = {
            piece_sqrt(p.b, -1.0, -2.0 * p.u_b, 0.0, t_al),
            piece_line((p.a + p.b) / 2.0, p.u_b / ba, t_al, t_rq),
            piece_linesqrt(p.b, p.u_a, 2.0 * kap, t_rq, kInf)};
        Curve gc = attach("gamma_c", p.c, chain, notes);
        record("t_rq", "r", "q", t_rq, r.eval(t_rq), q.eval(t_rq));
        record("t_lq", "l", "q", t_rq, l.eval(t_rq), q.eval(t_rq));
        cs.curves = {r, pcv, l, q, ga1, ga2, gc, gd};
      } else {
        Curve ga1 = make_curve("gamma_a1", {piece_line(p.a, p.u_a, 0.0, kInf)});
        Curve ga2 = make_curve("gamma_a2", {piece_const(p.a, 0.0, t_al),
                                            piece_line((p.a + p.b) / 2.0, p.u_b / ba, t_al, kInf)});
        std::vector<CurvePiece> chain = {piece_sqrt(p.b, -1.0, -2.0 * p.u_b, 0.0, t_al),
                                         piece_line((p.a + p.b) / 2.0, p.u_b / ba, t_al, kInf)};
        Curve gc = attach("gamma_c", p.c, chain, notes);
        cs.curves = {r, pcv, l, ga1, ga2, gc, gd};
      }
      break;
    }
  }
  return cs;
}

} // namespace adhesion

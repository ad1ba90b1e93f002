#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "adhesion/curves.hpp"

using namespace adhesion;

namespace {

CurveSet build(double a, double c, double b, double d, double ua, double ub) {
  const ProblemParams p = validate_params(a, c, b, d, ua, ub, 1, 2);
  return build_curves(p, classify_case(p));
}

void check_feet(const CurveSet& cs, const ProblemParams& p) {
  const std::map<std::string, double> feet = {
      {"r", p.a},        {"p", p.b},        {"q", p.b},        {"l_tilde", p.a},
      {"gamma_a", p.a},  {"gamma_b", p.b},  {"gamma_c", p.c},  {"gamma_d", p.d},
      {"gamma_a1", p.a}, {"gamma_a2", p.a}};
  for (const auto& c : cs.curves) {
    auto it = feet.find(c.label);
    if (it != feet.end()) CHECK(c.eval(0.0) == it->second);
  }
}

void check_continuity(const CurveSet& cs) {
  for (const auto& c : cs.curves)
    for (double bp : c.breakpoints()) {
      double left = 0, right = 0;
      for (const auto& pc : c.pieces) {
        if (pc.t_hi == bp) left = pc.eval(bp);
        if (pc.t_lo == bp) right = pc.eval(bp);
      }
      CHECK(std::abs(left - right) <= 1e-12 * (1.0 + std::abs(left)));
    }
}

void check_intersections(const CurveSet& cs) {
  for (const auto& it : cs.intersections) {
    INFO(it.name, " ", it.curve_a, " vs ", it.curve_b, " at t=", it.t);
    CHECK(std::abs(it.x_a - it.x_b) <= 1e-10 * (1.0 + std::abs(it.x_a)));
  }
}

} // namespace

TEST_CASE("case 1: exactly r, p and the delta carrier") {
  const ProblemParams p = validate_params(0, 1, 2, 3, -1, 1, 1, 2);
  const CurveSet cs = build_curves(p, classify_case(p));
  std::set<std::string> labels;
  for (const auto& c : cs.curves) labels.insert(c.label);
  CHECK(labels == std::set<std::string>{"r", "p", "gamma_d"});
  check_feet(cs, p);
  check_continuity(cs);
  check_intersections(cs);
  // gamma_d switches at t* = (d-b)^2/(2 u_b) = 0.5 and then rides p
  CHECK(cs.at("gamma_d").eval(0.3) == 3.0);
  CHECK(cs.at("gamma_d").eval(1.0) == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cs.intersections.size() == 1);
  CHECK(cs.intersections[0].name == "t_star");
  CHECK(cs.intersections[0].t == doctest::Approx(0.5));
  CHECK(cs.complete);
}

TEST_CASE("case 2: p and l meet where the construction says") {
  // a=0, b=2, u_a=1, u_b=1: t_pl = (sqrt(2)+2)^2, p(t_pl) = l(t_pl) ~ 6.8284
  const CurveSet cs = build(0, 1, 2, 3, 1, 1);
  double t_pl = 0;
  for (const auto& it : cs.intersections)
    if (it.name == "t_pl") t_pl = it.t;
  CHECK(t_pl == doctest::Approx(11.65685424949238).epsilon(1e-14));
  CHECK(cs.at("p").eval(t_pl) == doctest::Approx(6.828427124746190).epsilon(1e-13));
  CHECK(cs.at("l").eval(t_pl) == doctest::Approx(6.828427124746190).epsilon(1e-13));
  // gamma_a joins q exactly at x = b when t = 2(b-a)/u_a
  const double t_g = 4.0;
  CHECK(cs.at("gamma_a").eval(t_g) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(cs.at("q").eval(t_g) == doctest::Approx(2.0).epsilon(1e-14));
  check_continuity(cs);
  check_intersections(cs);
  check_feet(cs, validate_params(0, 1, 2, 3, 1, 1, 1, 2));
  // canonical parameters sit outside the detailed orderings
  CHECK_FALSE(cs.complete);
}

TEST_CASE("case 2 with the detailed-orderings configuration is complete") {
  // 2 u_b < u_a (b-a) and x_pr < d < x_pl
  const CurveSet cs = build(0, 1, 2, 4.2, 1, 0.4);
  CHECK(cs.sign_case.subcase == Subcase::Case2_TwoUbBelow);
  CHECK(cs.complete);
  check_continuity(cs);
  check_intersections(cs);
}

TEST_CASE("case 3: corrected q-l~ time is the p-q-l~ triple point") {
  const CurveSet cs = build(0, 1, 2, 3, 1, -1);
  double t_qlt = -1, t_pq = -2, t_ql = 0, t_pc = 0, t_ld = 0;
  for (const auto& it : cs.intersections) {
    if (it.name == "t_ql~") t_qlt = it.t;
    if (it.name == "t_pq") t_pq = it.t;
    if (it.name == "t_ql") t_ql = it.t;
    if (it.name == "t_pc") t_pc = it.t;
    if (it.name == "t_ld") t_ld = it.t;
  }
  // (sqrt(6)-sqrt(2))^2 = 8 - 4 sqrt(3)
  CHECK(t_qlt == doctest::Approx(8.0 - 4.0 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(t_pq == t_qlt); // p, q and l~ concur
  CHECK(cs.at("p").eval(t_pq) == doctest::Approx(cs.at("l_tilde").eval(t_pq)).epsilon(1e-13));
  CHECK(t_ql == doctest::Approx(6.0).epsilon(1e-14));       // 2 kappa / u_a^2
  CHECK(t_pc == doctest::Approx(0.5).epsilon(1e-14));       // (b-c)^2/(2|u_b|)
  CHECK(t_ld == doctest::Approx(8.0).epsilon(1e-14));       // 2(d-a+|u_b|/u_a)/u_a
  CHECK(cs.at("gamma_d").eval(t_ld) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(cs.at("gamma_c").eval(0.4) == 1.0);
  CHECK(cs.at("gamma_c").eval(0.7) ==
        doctest::Approx(2.0 - std::sqrt(2.0 * 0.7)).epsilon(1e-13)); // riding p
  check_continuity(cs);
  check_intersections(cs);
  CHECK(cs.complete);
}

TEST_CASE("case 4, u_a(b-a) <= u_b: no q curve; carriers stay ordered") {
  const ProblemParams p = validate_params(0, 1, 2, 3, -1, -1, 1, 2);
  const CurveSet cs = build_curves(p, classify_case(p));
  CHECK(cs.find("q") == nullptr);
  CHECK(cs.at("gamma_d").eval(5.0) == 3.0); // the right atom never moves
  // gamma_a2: frozen at a until t_al = (b-a)^2/(2|u_b|) = 2, then along l
  CHECK(cs.at("gamma_a2").eval(1.9) == 0.0);
  CHECK(cs.at("gamma_a2").eval(3.0) == doctest::Approx(1.0 - 1.5).epsilon(1e-13));
  // gamma_c: frozen at c until t_cp = 0.5, then p, merging into l at t_al
  CHECK(cs.at("gamma_c").eval(0.4) == 1.0);
  CHECK(cs.at("gamma_c").eval(1.0) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(cs.at("gamma_c").eval(3.0) == doctest::Approx(cs.at("gamma_a2").eval(3.0)).epsilon(1e-13));
  check_feet(cs, p);
  check_continuity(cs);
  check_intersections(cs);
  // ordering gamma_a1 <= gamma_a2 <= gamma_c <= gamma_d throughout
  for (double t : {0.1, 0.45, 0.9, 1.7, 2.4, 5.0, 11.0}) {
    CHECK(cs.at("gamma_a1").eval(t) <= cs.at("gamma_a2").eval(t) + 1e-12);
    CHECK(cs.at("gamma_a2").eval(t) <= cs.at("gamma_c").eval(t) + 1e-12);
    CHECK(cs.at("gamma_c").eval(t) <= cs.at("gamma_d").eval(t) + 1e-12);
  }
}

TEST_CASE("case 4, u_a(b-a) > u_b: r, l, q concur and the carriers merge there") {
  const ProblemParams p = validate_params(0, 1, 2, 3, -1, -3, 1, 2);
  const CurveSet cs = build_curves(p, classify_case(p));
  double t_rq = 0, t_lq = -1;
  for (const auto& it : cs.intersections) {
    if (it.name == "t_rq") t_rq = it.t;
    if (it.name == "t_lq") t_lq = it.t;
  }
  CHECK(t_rq == doctest::Approx(2.0).epsilon(1e-14)); // (b-a)^2/(2 kappa), kappa = 1
  CHECK(t_lq == t_rq);
  CHECK(cs.at("r").eval(t_rq) == doctest::Approx(cs.at("q").eval(t_rq)).epsilon(1e-12));
  CHECK(cs.at("l").eval(t_rq) == doctest::Approx(cs.at("q").eval(t_rq)).epsilon(1e-12));
  check_feet(cs, p);
  check_continuity(cs);
  check_intersections(cs);
  for (double t : {0.2, 0.6, 1.3, 1.9, 2.5, 6.0}) {
    CHECK(cs.at("gamma_a1").eval(t) <= cs.at("gamma_a2").eval(t) + 1e-12);
    CHECK(cs.at("gamma_a2").eval(t) <= cs.at("gamma_c").eval(t) + 1e-12);
  }
}

TEST_CASE("continuity and intersections hold across random admissible configs") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uu(0.2, 3.0), ug(0.2, 2.5);
  for (int i = 0; i < 200; ++i) {
    const double a = -2.0 + ug(rng);
    const double c = a + ug(rng), b = c + ug(rng), d = b + ug(rng);
    const double ua = uu(rng) * (i % 2 ? 1 : -1);
    const double ub = uu(rng) * (i % 3 ? 1 : -1);
    const CurveSet cs = build(a, c, b, d, ua, ub);
    check_continuity(cs);
    check_intersections(cs);
  }
}

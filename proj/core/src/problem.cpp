#include "adhesion/problem.hpp"

#include <cmath>

namespace adhesion {

ProblemParams validate_params(double a, double c, double b, double d,
                              double u_a, double u_b, double rho_c, double rho_d) {
  for (double v : {a, c, b, d, u_a, u_b, rho_c, rho_d})
    if (!std::isfinite(v)) throw validation_error("non-finite parameter");
  if (!(a < c)) throw validation_error("a < c violated");
  if (!(c < b)) throw validation_error("c < b violated");
  if (!(b < d)) throw validation_error("b < d violated");
  if (u_a == 0.0) throw validation_error("u_a must be nonzero");
  if (u_b == 0.0) throw validation_error("u_b must be nonzero");
  return ProblemParams{a, c, b, d, u_a, u_b, rho_c, rho_d};
}

ProblemParams validate_params(const ProblemParams& raw) {
  return validate_params(raw.a, raw.c, raw.b, raw.d, raw.u_a, raw.u_b, raw.rho_c, raw.rho_d);
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::Case1: return "case1";
    case CaseId::Case2: return "case2";
    case CaseId::Case3: return "case3";
    case CaseId::Case4: return "case4";
  }
  return "?";
}

std::string to_string(Subcase s) {
  switch (s) {
    case Subcase::None: return "none";
    case Subcase::Case2_TwoUbBelow: return "2u_b<u_a(b-a)";
    case Subcase::Case2_Middle: return "u_b<u_a(b-a)<=2u_b";
    case Subcase::Case2_UaBaBelowUb: return "u_a(b-a)<=u_b";
    case Subcase::Case3_AbsUbBelow: return "|u_b|<u_a(b-a)";
    case Subcase::Case3_AbsUbAtLeast: return "|u_b|>=u_a(b-a)";
    case Subcase::Case4_Greater: return "u_a(b-a)>u_b";
    case Subcase::Case4_LessEq: return "u_a(b-a)<=u_b";
  }
  return "?";
}

SignCase classify_case(const ProblemParams& p) {
  SignCase sc;
  const double uaba = p.u_a * (p.b - p.a);
  if (p.u_a < 0.0 && p.u_b > 0.0) {
    sc.case_id = CaseId::Case1;
    sc.subcase = Subcase::None;
  } else if (p.u_a > 0.0 && p.u_b > 0.0) {
    sc.case_id = CaseId::Case2;
    if (2.0 * p.u_b < uaba)
      sc.subcase = Subcase::Case2_TwoUbBelow;
    else if (p.u_b < uaba)
      sc.subcase = Subcase::Case2_Middle;
    else
      sc.subcase = Subcase::Case2_UaBaBelowUb;
    sc.on_subcase_boundary = (2.0 * p.u_b == uaba) || (p.u_b == uaba);
  } else if (p.u_a > 0.0 && p.u_b < 0.0) {
    sc.case_id = CaseId::Case3;
    sc.subcase = (std::abs(p.u_b) < uaba) ? Subcase::Case3_AbsUbBelow
                                          : Subcase::Case3_AbsUbAtLeast;
    sc.on_subcase_boundary = (std::abs(p.u_b) == uaba);
  } else {
    sc.case_id = CaseId::Case4;
    sc.subcase = (uaba > p.u_b) ? Subcase::Case4_Greater : Subcase::Case4_LessEq;
    sc.on_subcase_boundary = (uaba == p.u_b);
  }
  return sc;
}

ScaledArgs scaled_args(const ProblemParams& p, double x, double t, double eps) {
  if (!(t > 0.0)) throw validation_error("scaled_args: t must be positive");
  if (!(eps > 0.0)) throw validation_error("scaled_args: eps must be positive");
  const double s = std::sqrt(2.0 * t * eps);
  return ScaledArgs{std::abs(x - p.a) / s, std::abs(x - p.b) / s, std::abs(x - p.c) / s,
                    std::abs(x - p.d) / s, std::abs(x - p.a - p.u_a * t) / s};
}

} // namespace adhesion

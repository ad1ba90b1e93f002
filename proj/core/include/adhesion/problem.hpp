#pragma once

#include <string>

#include "adhesion/errors.hpp"

namespace adhesion {

/// Initial-data constants for the two-component system:
/// velocity jumps at a (step of height u_a) and b (point mass u_b),
/// density jumps at c (step of height rho_c) and d (point mass rho_d).
/// Hypotheses: a < c < b < d strictly, u_a != 0, u_b != 0.
struct ProblemParams {
  double a = 0.0;
  double c = 1.0;
  double b = 2.0;
  double d = 3.0;
  double u_a = -1.0;
  double u_b = 1.0;
  double rho_c = 1.0;
  double rho_d = 1.0;
};

/// Checks the hypotheses and returns the validated parameters.
/// Throws validation_error naming the violated inequality.
ProblemParams validate_params(double a, double c, double b, double d,
                              double u_a, double u_b, double rho_c, double rho_d);
ProblemParams validate_params(const ProblemParams& raw);

enum class CaseId { Case1, Case2, Case3, Case4 };

/// Case-2 splits on u_a(b-a) against u_b and 2u_b; Case-3 and Case-4 are
/// two-way splits. Cases 1 has no subcase.
enum class Subcase {
  None,
  Case2_TwoUbBelow,   // 2 u_b <  u_a (b-a)            (the fully detailed one)
  Case2_Middle,       //   u_b <  u_a (b-a) <= 2 u_b
  Case2_UaBaBelowUb,  //          u_a (b-a) <= u_b
  Case3_AbsUbBelow,   // |u_b| <  u_a (b-a)            (the fully detailed one)
  Case3_AbsUbAtLeast, // |u_b| >= u_a (b-a)
  Case4_Greater,      // u_a (b-a) >  u_b  (q-curve exists)
  Case4_LessEq,       // u_a (b-a) <= u_b
};

struct SignCase {
  CaseId case_id = CaseId::Case1;
  Subcase subcase = Subcase::None;
  /// The input sat exactly on a subcase-splitting equality.
  bool on_subcase_boundary = false;
};

std::string to_string(CaseId id);
std::string to_string(Subcase s);

/// Case from the signs of u_a, u_b; subcase from the splitting inequalities.
/// Ties go to the "<=" side, with on_subcase_boundary set.
SignCase classify_case(const ProblemParams& p);

/// The five nonnegative similarity coordinates |x - station| / sqrt(2 t eps).
/// Each diverges as eps -> 0 away from its station (a, b, c, d, a + u_a t).
struct ScaledArgs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double P = 0.0;
};

ScaledArgs scaled_args(const ProblemParams& p, double x, double t, double eps);

} // namespace adhesion

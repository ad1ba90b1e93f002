#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adhesion/problem.hpp"

namespace adhesion {

/// Piecewise-analytic wave curves t -> x. Piece catalog:
///   Const:    x = c0
///   Line:     x = c0 + c1 t
///   Sqrt:     x = c0 + c1 sqrt(c2 t)        (c2 > 0, c1 = +-1)
///   LineSqrt: x = c0 + c1 t - sqrt(c2 t)    (c2 > 0)
struct CurvePiece {
  enum class Kind { Const, Line, Sqrt, LineSqrt } kind;
  double t_lo = 0.0;
  double t_hi = 0.0; // inf for the last piece
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;

  double eval(double t) const;
};

struct Curve {
  std::string label; // "r", "p", "q", "l", "l_tilde", "gamma_a", ...
  std::vector<CurvePiece> pieces;

  double eval(double t) const;
  /// Interior piece-joining times (excludes 0 and inf).
  std::vector<double> breakpoints() const;
};

/// A named closed-form intersection: curve_a(t) == curve_b(t) (curve_b may be
/// a vertical station "x=c"), with both sides evaluated for verification.
struct Intersection {
  std::string name; // "t_pl", "t_star", ...
  std::string curve_a, curve_b;
  double t = 0.0;
  double x_a = 0.0, x_b = 0.0;
};

struct CurveSet {
  SignCase sign_case;
  std::vector<Curve> curves;
  std::vector<Intersection> intersections;
  /// False when the configuration falls outside the orderings the detailed
  /// constructions assume; curves are still built by the same pattern.
  bool complete = true;
  std::vector<std::string> completeness_notes;

  const Curve* find(const std::string& label) const;
  const Curve& at(const std::string& label) const;
};

/// Builds the wave curves, delta-carrier curves and named intersection times
/// for the given sign case.
CurveSet build_curves(const ProblemParams& p, const SignCase& sc);

} // namespace adhesion

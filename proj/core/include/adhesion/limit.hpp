#pragma once

#include <string>
#include <vector>

#include "adhesion/curves.hpp"
#include "adhesion/problem.hpp"

namespace adhesion {

/// Value kinds of the limiting velocity field.
enum class UKind { LeftConstant, RarefactionA, JetB, Zero };
/// Value kinds of the limiting antiderivative field R.
enum class RKind { AdvectedRamp, FanPlateau, SteadyRamp, Zero, RightPlateau };

/// Stable region label strings (schema v1), used in CSV exports.
std::string label_of(UKind k);
std::string label_of(RKind k);
inline constexpr const char* kBoundaryLabel = "boundary";
inline constexpr int kRegionSchemaVersion = 1;

struct LimitValue {
  double value = 0.0;
  std::string label;
  bool boundary = false;
};

/// Pointwise limit fields. Points exactly on a station {a,b,c,d} or on any
/// curve of the set are tagged boundary (value 0, label "boundary") — the
/// open-region displays claim nothing there.
LimitValue u_limit(const ProblemParams& p, const CurveSet& cs, double x, double t);
LimitValue R_limit(const ProblemParams& p, const CurveSet& cs, double x, double t);

/// One maximal open x-interval of the joint (u, R) region decomposition at
/// fixed t, clipped to a window.
struct RegionSeg {
  double lo = 0.0, hi = 0.0;
  UKind u_kind = UKind::Zero;
  RKind r_kind = RKind::Zero;
};

/// Decomposes (x_lo, x_hi) at time t into segments on which both value kinds
/// are constant. Segment edges are the stations and curve positions.
std::vector<RegionSeg> regions_at(const ProblemParams& p, const CurveSet& cs, double t,
                                  double x_lo, double x_hi);

/// All region predicates firing at (x, t); interior points get exactly one.
std::vector<UKind> u_region_claims(const ProblemParams& p, const CurveSet& cs, double x, double t);
std::vector<RKind> R_region_claims(const ProblemParams& p, const CurveSet& cs, double x, double t);

/// Evaluate the u/R formula of a kind at (x, t).
double u_value(const ProblemParams& p, UKind k, double x, double t);
double R_value(const ProblemParams& p, RKind k, double x, double t);

} // namespace adhesion

#include <doctest.h>

#include <cmath>
#include <random>

#include "adhesion/limit.hpp"

using namespace adhesion;

namespace {

struct Setup {
  ProblemParams p;
  CurveSet cs;
};

Setup setup(double ua, double ub, double rc = 1, double rd = 2) {
  Setup s{validate_params(0, 1, 2, 3, ua, ub, rc, rd), {}};
  s.cs = build_curves(s.p, classify_case(s.p));
  return s;
}

} // namespace

TEST_CASE("case 1 pointwise values match the displayed fields") {
  const auto [p, cs] = setup(-1, 1);
  CHECK(u_limit(p, cs, -2.0, 1.0).value == -1.0);
  CHECK(u_limit(p, cs, -2.0, 1.0).label == "left-constant");
  CHECK(u_limit(p, cs, -0.5, 1.0).value == doctest::Approx(-0.5)); // rarefaction (x-a)/t
  CHECK(u_limit(p, cs, -0.5, 1.0).label == "rarefaction-a");
  CHECK(u_limit(p, cs, 2.5, 1.0).value == doctest::Approx(0.5)); // jet (x-b)/t
  CHECK(u_limit(p, cs, 4.0, 1.0).value == 0.0);                  // beyond p(1) = 3.414
  CHECK(u_limit(p, cs, 1.2, 1.0).value == 0.0);                  // plateau (a,b)

  CHECK(R_limit(p, cs, -3.0, 1.0).value == doctest::Approx(-3.0)); // rho_c(x-c-u_a t)
  CHECK(R_limit(p, cs, -3.0, 1.0).label == "advected-ramp");
  CHECK(R_limit(p, cs, 1.5, 0.1).value == 0.0); // zero band inside (c,d)
  CHECK(R_limit(p, cs, 0.5, 1.0).value == doctest::Approx(-0.5)); // rho_c(x-c)
  CHECK(R_limit(p, cs, -0.5, 1.0).value == doctest::Approx(-1.0)); // fan plateau rho_c(a-c)
  CHECK(R_limit(p, cs, -0.5, 1.0).label == "fan-plateau");
  CHECK(R_limit(p, cs, 4.0, 1.0).value == 2.0); // right plateau past p(1)
  CHECK(R_limit(p, cs, 3.2, 0.1).value == 2.0); // past d before the carrier moves
}

TEST_CASE("zero density data => R identically zero") {
  const auto [p, cs] = setup(-1, 1, 0, 0);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ux(-6, 7), ut(0.05, 6.0);
  for (int i = 0; i < 300; ++i) {
    const auto r = R_limit(p, cs, ux(rng), ut(rng));
    if (!r.boundary) CHECK(r.value == 0.0);
  }
}

TEST_CASE("stations and curve positions are tagged boundary") {
  const auto [p, cs] = setup(-1, 1);
  CHECK(u_limit(p, cs, p.a, 1.0).boundary);
  CHECK(u_limit(p, cs, p.c, 1.0).boundary);
  CHECK(R_limit(p, cs, p.d, 0.2).boundary);
  const double pt = cs.at("p").eval(1.0);
  CHECK(u_limit(p, cs, pt, 1.0).boundary);
  CHECK(u_limit(p, cs, pt, 1.0).label == kBoundaryLabel);
  CHECK_FALSE(u_limit(p, cs, pt + 0.05, 1.0).boundary);
}

TEST_CASE("partition property: exactly one region claims any interior point") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> ux(-8.0, 10.0), ut(0.02, 14.0);
  for (const auto& [ua, ub] :
       {std::pair{-1.0, 1.0}, {1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}, {1.0, 0.4},
        {1.0, 3.0}, {1.0, -5.0}, {-1.0, -3.0}}) {
    const auto [p, cs] = setup(ua, ub);
    for (int i = 0; i < 10000; ++i) {
      const double x = ux(rng), t = ut(rng);
      if (u_limit(p, cs, x, t).boundary) continue; // measure-zero exact hits
      CHECK(u_region_claims(p, cs, x, t).size() == 1);
      CHECK(R_region_claims(p, cs, x, t).size() == 1);
    }
  }
}

TEST_CASE("regions_at tiles the window without gaps") {
  for (const auto& [ua, ub] :
       {std::pair{-1.0, 1.0}, {1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}, {-1.0, -3.0}}) {
    const auto [p, cs] = setup(ua, ub);
    for (double t : {0.3, 0.9, 2.1, 4.7, 9.3}) {
      const auto segs = regions_at(p, cs, t, -9.0, 11.0);
      REQUIRE(!segs.empty());
      double covered = 0.0;
      for (const auto& s : segs) covered += s.hi - s.lo;
      CHECK(covered == doctest::Approx(20.0).epsilon(1e-12));
      for (size_t i = 0; i + 1 < segs.size(); ++i) CHECK(segs[i].hi == segs[i + 1].lo);
    }
  }
}

TEST_CASE("case 2 structure: half-speed contact inside (a,b), triple point beyond") {
  const auto [p, cs] = setup(1, 1);
  // t = 1: l~(1) = 0.5 splits (a,b); jet fills (b, p(1))
  CHECK(u_limit(p, cs, 0.3, 1.0).value == 1.0);
  CHECK(u_limit(p, cs, 0.8, 1.0).value == 0.0);
  CHECK(u_limit(p, cs, 2.7, 1.0).value == doctest::Approx(0.7));
  CHECK(u_limit(p, cs, 3.6, 1.0).value == 0.0);
  // t = 6 (after the carriers pass b): u_a region reaches q(6), jet to p(6)
  const double q6 = cs.at("q").eval(6.0), p6 = cs.at("p").eval(6.0);
  CHECK(u_limit(p, cs, q6 - 0.1, 6.0).value == 1.0);
  CHECK(u_limit(p, cs, 0.5 * (q6 + p6), 6.0).value ==
        doctest::Approx((0.5 * (q6 + p6) - p.b) / 6.0));
  CHECK(u_limit(p, cs, p6 + 0.1, 6.0).value == 0.0);
  // R follows the carriers
  CHECK(R_limit(p, cs, q6 - 0.1, 6.0).value ==
        doctest::Approx(p.rho_c * (q6 - 0.1 - p.c - p.u_a * 6.0)));
  CHECK(R_limit(p, cs, 0.5 * (q6 + p6), 6.0).value == 0.0);
  CHECK(R_limit(p, cs, p6 + 0.1, 6.0).value == 2.0);
}

TEST_CASE("case 3 structure: left jet behind q, single shock late") {
  const auto [p, cs] = setup(1, -1);
  // t = 1: q(1) = 3 - sqrt(6) ~ 0.551 lies inside (a, b)
  const double q1 = cs.at("q").eval(1.0);
  CHECK(u_limit(p, cs, q1 - 0.1, 1.0).value == 1.0);
  CHECK(u_limit(p, cs, 1.5, 1.0).value == doctest::Approx(-0.5)); // jet (x-b)/t
  // late: everything rides l at speed u_a/2
  const double l10 = cs.at("l").eval(10.0);
  CHECK(u_limit(p, cs, l10 - 0.2, 10.0).value == 1.0);
  CHECK(u_limit(p, cs, l10 + 0.2, 10.0).value == 0.0);
  CHECK(R_limit(p, cs, l10 - 0.2, 10.0).value ==
        doctest::Approx(p.rho_c * (l10 - 0.2 - p.c - 10.0)));
  CHECK(R_limit(p, cs, l10 + 0.2, 10.0).value == 2.0);
}

TEST_CASE("case 4 structure: left fan, left-moving jet from b, vacuum fan plateau") {
  const auto [p, cs] = setup(-1, -1);
  CHECK(u_limit(p, cs, -2.0, 1.0).value == -1.0);
  CHECK(u_limit(p, cs, -0.5, 1.0).value == doctest::Approx(-0.5)); // (x-a)/t fan
  CHECK(u_limit(p, cs, 0.3, 1.0).value == 0.0);                    // left of p(1) = 0.586
  CHECK(u_limit(p, cs, 1.5, 1.0).value == doctest::Approx(-0.5)); // jet (x-b)/t
  CHECK(u_limit(p, cs, 2.5, 1.0).value == 0.0);
  CHECK(R_limit(p, cs, 2.5, 1.0).value == 0.0);
  CHECK(R_limit(p, cs, 3.5, 1.0).value == 2.0);
  CHECK(R_limit(p, cs, -0.5, 1.0).value == doctest::Approx(-1.0)); // fan plateau
  CHECK(R_limit(p, cs, 0.8, 1.0).label == "zero"); // gamma_c(1) = 0.586 < 0.8
}

TEST_CASE("t must be positive") {
  const auto [p, cs] = setup(-1, 1);
  CHECK_THROWS_AS(u_limit(p, cs, 0.0, 0.0), validation_error);
  CHECK_THROWS_AS(R_limit(p, cs, 0.0, -1.0), validation_error);
}

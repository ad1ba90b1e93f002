#pragma once

#include "adhesion/log_scaled.hpp"

namespace adhesion {

/// Gauss-normalized complementary error function and scaled variants.
///
/// Everything downstream uses the tail-integral convention
///
///   erfc_gauss(z) = \int_z^inf e^{-s^2} ds = (sqrt(pi)/2) * std::erfc(z),
///
/// i.e. erfc_gauss(0) = sqrt(pi)/2 and erfc_gauss(z) + erfc_gauss(-z) = sqrt(pi).
/// The conversion factor to the conventional erfc appears only here.

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kHalfSqrtPi = 0.88622692545275801365;

/// Tail integral of e^{-s^2}. Relative error <= 1e-13 for |z| <= 8;
/// underflows to the correctly rounded tiny value for large z.
double erfc_gauss(double z);

/// e^{z^2} * erfc_gauss(z), evaluated without forming either factor.
/// Relative error <= 1e-12 on [-6, inf). Overflows (throws) as z -> -inf.
double erfcx_gauss(double z);

/// z * erfcx_gauss(z); increases to the limit 1/2, with
/// |zerfcx_gauss(z) - 1/2| <= 3/(8 z^2) for z >= 2.
double zerfcx_gauss(double z);

/// Crossover above which erfcx_gauss switches from e^{z^2}*erfc to the
/// asymptotic tail series. Exposed so tests can pin the branch match.
inline constexpr double kErfcxSeriesCrossover = 8.0;

/// erfc_gauss(z) as sign/log-magnitude, finite for every finite z.
/// For z >= 0 this is log(erfcx_gauss(z)) - z^2; for z < 0 the reflection
/// erfc_gauss(z) = sqrt(pi) - erfc_gauss(-z) keeps the mantissa O(1).
LogScaled erfc_gauss_log(double z);

} // namespace adhesion

#include "adhesion/gauss_erfc.hpp"

#include <cmath>

#include "adhesion/errors.hpp"

namespace adhesion {

namespace {

// Asymptotic tail series for e^{z^2} \int_z^inf e^{-s^2} ds:
//   1/(2z) - 1/(4z^3) + 3/(8z^5) - ...
// with term ratio -(2k-1)/(2z^2). For z >= kErfcxSeriesCrossover the terms
// shrink below 1 ulp long before the divergent regime, so truncation at the
// first negligible term leaves relative error well under 1e-13.
double erfcx_series(double z) {
  const double inv2z2 = 1.0 / (2.0 * z * z);
  double term = 1.0 / (2.0 * z);
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -(2.0 * k - 1.0) * inv2z2;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

} // namespace

double erfc_gauss(double z) {
  if (std::isnan(z)) throw validation_error("erfc_gauss: NaN argument");
  if (z > 26.0) {
    // e^{-z^2} underflows gracefully; std::erfc itself dies slightly later.
    return erfcx_series(z) * std::exp(-z * z);
  }
  return kHalfSqrtPi * std::erfc(z);
}

double erfcx_gauss(double z) {
  if (std::isnan(z)) throw validation_error("erfcx_gauss: NaN argument");
  if (z >= kErfcxSeriesCrossover) return erfcx_series(z);
  if (z * z > 709.0)
    throw numerics_error("erfcx_gauss: e^{z^2} overflows for z = " + std::to_string(z));
  return std::exp(z * z) * kHalfSqrtPi * std::erfc(z);
}

double zerfcx_gauss(double z) {
  if (z == 0.0) return 0.0;
  return z * erfcx_gauss(z);
}

LogScaled erfc_gauss_log(double z) {
  if (std::isnan(z)) throw validation_error("erfc_gauss_log: NaN argument");
  if (z >= 0.0) return {std::log(erfcx_gauss(z)) - z * z, 1};
  // z < 0: sqrt(pi) minus a tail that is at most sqrt(pi)/2, so no cancellation.
  return LogScaled::from_double(kSqrtPi - erfc_gauss(-z));
}

} // namespace adhesion

#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <span>

#include "adhesion/errors.hpp"

namespace adhesion {

/// A real number stored as sign * exp(log_abs).
///
/// The viscous closed forms combine terms whose exponents grow like 1/eps,
/// far beyond double range. All sums and quotients of such terms are done in
/// this representation; only final, physically bounded quantities are
/// converted back to double.
struct LogScaled {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0; // -1, 0, +1

  static LogScaled zero() { return {}; }

  static LogScaled from_double(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
  }

  /// value = coeff * exp(exponent)
  static LogScaled scaled(double coeff, double exponent) {
    if (coeff == 0.0) return zero();
    return {std::log(std::abs(coeff)) + exponent, coeff > 0.0 ? 1 : -1};
  }

  bool is_zero() const { return sign == 0; }

  /// Convert back to double. Overflow is an error, underflow flushes to 0.
  double to_double() const {
    if (sign == 0) return 0.0;
    if (log_abs > 709.0) // log(DBL_MAX) = 709.78
      throw numerics_error("LogScaled::to_double: exponent " + std::to_string(log_abs) +
                           " exceeds double range");
    return sign * std::exp(log_abs);
  }

  LogScaled operator*(const LogScaled& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {log_abs + o.log_abs, sign * o.sign};
  }

  LogScaled operator/(const LogScaled& o) const {
    if (o.sign == 0) throw numerics_error("LogScaled: division by zero");
    if (sign == 0) return zero();
    return {log_abs - o.log_abs, sign * o.sign};
  }

  LogScaled operator-() const { return {log_abs, -sign}; }
};

/// Stable signed sum: factor out the dominant exponent, accumulate mantissas.
inline LogScaled log_sum(std::span<const LogScaled> terms) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0 && t.log_abs > m) m = t.log_abs;
  if (!std::isfinite(m)) return LogScaled::zero();
  double acc = 0.0;
  for (const auto& t : terms)
    if (t.sign != 0) acc += t.sign * std::exp(t.log_abs - m);
  if (acc == 0.0) return LogScaled::zero();
  return {m + std::log(std::abs(acc)), acc > 0.0 ? 1 : -1};
}

inline LogScaled log_sum(std::initializer_list<LogScaled> terms) {
  return log_sum(std::span<const LogScaled>(terms.begin(), terms.size()));
}

} // namespace adhesion

#pragma once

#include <stdexcept>
#include <string>

namespace adhesion {

/// Input failed a precondition (bad ordering, zero velocity, non-finite data, ...).
class validation_error : public std::invalid_argument {
public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical evaluation could not be completed honestly
/// (overflow of a double-valued result, quadrature non-convergence, ...).
class numerics_error : public std::runtime_error {
public:
  explicit numerics_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace adhesion

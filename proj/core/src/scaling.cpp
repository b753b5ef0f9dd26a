#include "cqd/scaling.hpp"

#include <cmath>

#include "cqd/constants.hpp"
#include "cqd/errors.hpp"

namespace cqd {

Scaling make_scaling(double inductance, double linear_capacitance) {
  require(std::isfinite(inductance) && inductance > 0.0, errc::invalid_circuit,
          "make_scaling: inductance must be finite and > 0");
  require(std::isfinite(linear_capacitance) && linear_capacitance > 0.0, errc::invalid_circuit,
          "make_scaling: linearized capacitance must be finite and > 0");
  Scaling s;
  s.omega_ref = 1.0 / std::sqrt(inductance * linear_capacitance);
  s.charge_ref = std::sqrt(constants::hbar / (2.0 * inductance * s.omega_ref));
  s.energy_ref = constants::hbar * s.omega_ref;
  return s;
}

}  // namespace cqd

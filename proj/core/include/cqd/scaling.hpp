#pragma once

namespace cqd {

/// Nondimensionalization anchored at the zero-bias linearized circuit.
/// With omega_ref = 1/sqrt(L C0) and charge_ref = sqrt(hbar/(2 L omega_ref)),
/// the linearized Hamiltonian reads  -d^2/dq^2 + q^2/4  in scaled units and
/// has eigenvalues (n + 1/2).
struct Scaling {
  double omega_ref = 0.0;   // [rad/s]
  double charge_ref = 0.0;  // [C]
  double energy_ref = 0.0;  // [J], always hbar * omega_ref

  double scale_energy(double joules) const { return joules / energy_ref; }
  double unscale_energy(double scaled) const { return scaled * energy_ref; }
  double scale_charge(double coulombs) const { return coulombs / charge_ref; }
  double unscale_charge(double scaled) const { return scaled * charge_ref; }
  double scale_frequency(double rad_per_s) const { return rad_per_s / omega_ref; }
  double unscale_frequency(double scaled) const { return scaled * omega_ref; }
};

/// Builds the scaling from inductance and zero-bias linearized capacitance.
/// Throws invalid-circuit for non-finite or non-positive inputs.
Scaling make_scaling(double inductance, double linear_capacitance);

}  // namespace cqd

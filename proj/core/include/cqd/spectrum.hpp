#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cqd/scaling.hpp"

namespace cqd {

/// Potential energy [J] as a function of charge [C]. Must be even, convex and
/// zero at zero for the charge-basis solver.
using PotentialFn = std::function<double(double)>;

struct GridSpec {
  int n_points = 2001;      // odd, >= 201
  double q_min = 0.0;       // scaled charge bounds (ignored when auto_domain)
  double q_max = 0.0;
  bool auto_domain = true;

  void validate() const;
};

struct Spectrum {
  std::vector<double> levels;      // [J], strictly increasing
  int n_levels = 0;                // count requested
  bool converged = false;
  double refinement_error = 0.0;   // max relative change on the last refinement
};

/// Parameters of the quartic number-basis Hamiltonian
///   H = hbar omega (a^dag a + 1/2) + (1/4) hbar omega (alpha - omega tau) X^4,
/// X = a^dag + a. alpha is the junction contribution, tau the capacitor's
/// nonlinear interaction time.
struct KerrParams {
  double omega = 0.0;  // [rad/s]
  double alpha = 0.0;  // dimensionless
  double tau = 0.0;    // [s]
  int n_trunc = 120;

  void validate() const;
};

/// Raw finite-difference kernel: lowest k levels of
///   H = -kinetic_coeff d^2/dpsi^2 + U(q)
/// on a uniform grid with Dirichlet boundaries, in whatever consistent units
/// the caller chose. No refinement, no scaling.
std::vector<double> fd_levels(const PotentialFn& potential, double kinetic_coeff, double q_min,
                              double q_max, int n_points, int k);

struct RefinedLevels {
  std::vector<double> levels;
  bool converged = false;
  double refinement_error = 0.0;
  int n_points = 0;
};

/// fd_levels with grid doubling until the largest relative eigenvalue change
/// drops below tol, or max_doublings elapse.
RefinedLevels fd_levels_refined(const PotentialFn& potential, double kinetic_coeff, double q_min,
                                double q_max, int n_points, int k, double tol = 1e-6,
                                int max_doublings = 4);

/// Zero-bias linear capacitance 1/U''(0) from an iterated central-difference
/// curvature probe; the inductance sets the probe's charge scale.
double probe_linear_capacitance(const PotentialFn& potential, double inductance);

/// Symmetric domain covering 1.5x the classical turning point of the level
/// n_levels + 2 of the linearized circuit, in scaled charge units.
GridSpec auto_domain(const PotentialFn& potential, double inductance, int n_levels,
                     std::optional<double> linear_capacitance = {});

/// Charge-basis Schroedinger solve of H = Phi^2/(2L) + U(Q) with
/// [Phi, Q] = i hbar. Runs in scaled units internally; returns the lowest
/// n_levels eigenvalues in joules.
Spectrum solve_charge_basis(const PotentialFn& potential, double inductance, int n_levels,
                            const GridSpec& grid = {},
                            std::optional<double> linear_capacitance = {}, double tol = 1e-6);

/// Full (non-rotating-wave) diagonalization of the truncated number-basis
/// Hamiltonian. Truncation is verified by an internal n_trunc -> 2 n_trunc
/// comparison at 1e-8 relative; failure raises a solver error.
Spectrum solve_fock_kerr(const KerrParams& params, int n_levels);

}  // namespace cqd

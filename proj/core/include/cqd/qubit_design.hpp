#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqd/qcap.hpp"
#include "cqd/scaling.hpp"
#include "cqd/spectrum.hpp"

namespace cqd {

/// Oscillator made of a capacitor network and a linear inductor. Exactly one
/// of {inductance, design frequency} fixes L at construction; afterwards
/// inductance is always set.
struct CircuitSpec {
  CapacitorNetwork network{};
  double inductance = 0.0;                   // [H]
  std::optional<double> design_frequency{};  // [Hz] when L was derived from it

  static CircuitSpec from_inductance(CapacitorNetwork network, double inductance);
  static CircuitSpec from_design_frequency(CapacitorNetwork network, double f_design);
  void validate() const;

  /// Zero-bias linearized resonance 1/(2 pi sqrt(L C0)).
  double linearized_frequency() const;
};

Scaling make_scaling(const CircuitSpec& circuit);

/// L such that the zero-bias linearized circuit resonates at f_design.
double design_inductor(const CapacitorNetwork& network, double f_design);

struct FeasibilityReport {
  bool puddle_density_ok = false;
  bool puddle_depth_ok = false;
  bool temperature_ok = false;
  std::vector<std::string> messages;

  bool all_ok() const { return puddle_density_ok && puddle_depth_ok && temperature_ok; }
};

/// Which stored-energy target defines the zero-point amplitude: the full
/// half-quantum (turning-point reading) or the virial quarter-quantum.
enum class ZeroPointRule { half_quantum, quarter_quantum };

struct AnalyzeOptions {
  int n_levels = 3;
  double puddle_density = 0.0;  // [cm^-2]
  double puddle_depth = 0.0;    // [meV]
  ZeroPointRule zp_rule = ZeroPointRule::half_quantum;
  GridSpec grid{};
  double tolerance = 1e-6;
};

struct QubitSolution {
  double f_actual = 0.0;           // (E1 - E0)/h [Hz]
  double anharmonicity_pct = 0.0;  // 100 * (w01 - w12)/w01
  double tau = 0.0;                // [s]
  double v_zp = 0.0;               // [V]
  double n_zp = 0.0;               // zero-point carrier count
  double f_linearized = 0.0;       // [Hz], zero-bias LC resonance
  Spectrum spectrum{};
  FeasibilityReport feasible{};
};

/// Full figure-of-merit pipeline: charge-basis spectrum, transition frequency,
/// anharmonicity, perturbative tau, zero-point amplitudes, feasibility flags.
QubitSolution analyze(const CircuitSpec& circuit, const AnalyzeOptions& options = {});

/// First-order inversion tau = A/(3 w01) with A the fractional anharmonicity
/// and w01 = (E1 - E0)/hbar. A perturbative estimate: level spacings of the
/// quartic Hamiltonian shift by -3 w tau and -6 w tau at first order.
double extract_tau(const Spectrum& spectrum, double omega_design);

/// Charge amplitude at which the stored energy reaches the half-quantum
/// (or quarter-quantum) of the 0->1 transition; returns {V_zp, n_zp}.
std::pair<double, double> zero_point(const CircuitSpec& circuit, const Spectrum& spectrum,
                                     ZeroPointRule rule = ZeroPointRule::half_quantum);

/// Advisory threshold checks: puddle density < 1e8 cm^-2, puddle depth
/// < 10 meV, and hbar w01 > 2 k_B T. Never blocks analysis.
FeasibilityReport check_feasibility(const CircuitSpec& circuit, double puddle_density,
                                    double puddle_depth, double f_actual);

}  // namespace cqd

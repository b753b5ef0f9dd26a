#include "cqd/qubit_design.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cqd/constants.hpp"
#include "cqd/errors.hpp"

namespace cqd {

namespace {
constexpr double kPuddleDensityBound = 1e8;  // [cm^-2]
constexpr double kPuddleDepthBound = 10.0;   // [meV]
}  // namespace

CircuitSpec CircuitSpec::from_inductance(CapacitorNetwork network, double inductance) {
  CircuitSpec c;
  c.network = std::move(network);
  c.inductance = inductance;
  c.validate();
  return c;
}

CircuitSpec CircuitSpec::from_design_frequency(CapacitorNetwork network, double f_design) {
  CircuitSpec c;
  c.inductance = design_inductor(network, f_design);
  c.network = std::move(network);
  c.design_frequency = f_design;
  c.validate();
  return c;
}

void CircuitSpec::validate() const {
  network.validate();
  require(std::isfinite(inductance) && inductance > 0.0, errc::invalid_circuit,
          "CircuitSpec: inductance must be finite and > 0");
}

double CircuitSpec::linearized_frequency() const {
  return 1.0 / (2.0 * std::numbers::pi * std::sqrt(inductance * linearized_capacitance(network)));
}

Scaling make_scaling(const CircuitSpec& circuit) {
  circuit.validate();
  return make_scaling(circuit.inductance, linearized_capacitance(circuit.network));
}

double design_inductor(const CapacitorNetwork& network, double f_design) {
  require(std::isfinite(f_design) && f_design > 0.0, errc::invalid_argument,
          "design_inductor: design frequency must be finite and > 0");
  const double omega = 2.0 * std::numbers::pi * f_design;
  return 1.0 / (omega * omega * linearized_capacitance(network));
}

double extract_tau(const Spectrum& spectrum, double omega_design) {
  require(std::isfinite(omega_design) && omega_design > 0.0, errc::invalid_argument,
          "extract_tau: omega_design must be finite and > 0");
  require(spectrum.levels.size() >= 3, errc::invalid_argument,
          "extract_tau: spectrum must carry at least three levels");
  const double w01 = (spectrum.levels[1] - spectrum.levels[0]) / constants::hbar;
  const double w12 = (spectrum.levels[2] - spectrum.levels[1]) / constants::hbar;
  const double anharmonicity = (w01 - w12) / w01;
  require(anharmonicity > -1.0, errc::numeric_domain,
          "extract_tau: pathological spectrum (fractional anharmonicity <= -1)");
  return anharmonicity / (3.0 * w01);
}

std::pair<double, double> zero_point(const CircuitSpec& circuit, const Spectrum& spectrum,
                                     ZeroPointRule rule) {
  require(spectrum.levels.size() >= 2, errc::invalid_argument,
          "zero_point: spectrum must carry the ground and first excited level");
  const double w01 = (spectrum.levels[1] - spectrum.levels[0]) / constants::hbar;
  const double fraction = (rule == ZeroPointRule::half_quantum) ? 0.5 : 0.25;
  const double target = fraction * constants::hbar * w01;

  // E is even, zero at zero and strictly increasing on the positive branch;
  // bracket by doubling from the linearized amplitude, then bisect + polish
  // with Newton (E' = total voltage across the network).
  const double c0 = linearized_capacitance(circuit.network);
  double hi = std::sqrt(2.0 * c0 * target);
  int grow = 0;
  while (energy_of_charge(circuit.network, hi) < target) {
    hi *= 2.0;
    require(++grow <= 200, errc::numeric_domain, "zero_point: bracketing diverged");
  }
  double lo = 0.0;
  double q = hi;
  for (int i = 0; i < 200; ++i) {
    const double f = energy_of_charge(circuit.network, q) - target;
    if (std::abs(f) <= 1e-12 * target) break;
    if (f > 0.0) {
      hi = q;
    } else {
      lo = q;
    }
    double dv = node_voltage(circuit.network, q);
    if (circuit.network.series_cs) dv += q / *circuit.network.series_cs;
    double next = (dv > 0.0) ? q - f / dv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == q) break;
    q = next;
  }

  const double v_zp = node_voltage(circuit.network, q);
  const double n_zp = q / constants::e;
  return {v_zp, n_zp};
}

FeasibilityReport check_feasibility(const CircuitSpec& circuit, double puddle_density,
                                    double puddle_depth, double f_actual) {
  require(std::isfinite(puddle_density) && puddle_density >= 0.0, errc::invalid_argument,
          "check_feasibility: puddle density must be finite and >= 0");
  require(std::isfinite(puddle_depth) && puddle_depth >= 0.0, errc::invalid_argument,
          "check_feasibility: puddle depth must be finite and >= 0");
  require(std::isfinite(f_actual) && f_actual > 0.0, errc::invalid_argument,
          "check_feasibility: frequency must be finite and > 0");

  FeasibilityReport r;
  std::ostringstream msg;

  r.puddle_density_ok = puddle_density < kPuddleDensityBound;
  msg << "puddle density " << puddle_density << " cm^-2 "
      << (r.puddle_density_ok ? "<" : ">=") << " bound " << kPuddleDensityBound << " cm^-2";
  r.messages.push_back(msg.str());

  msg.str("");
  r.puddle_depth_ok = puddle_depth < kPuddleDepthBound;
  msg << "puddle depth " << puddle_depth << " meV " << (r.puddle_depth_ok ? "<" : ">=")
      << " bound " << kPuddleDepthBound << " meV";
  r.messages.push_back(msg.str());

  msg.str("");
  const double temperature = circuit.network.qcap.temperature;
  const double lhs = constants::hbar * 2.0 * std::numbers::pi * f_actual;
  const double rhs = 2.0 * constants::k_B * temperature;
  r.temperature_ok = lhs > rhs;
  msg << "hbar*w01 " << (r.temperature_ok ? ">" : "<=") << " 2 kB T at T = " << temperature
      << " K (f01 = " << f_actual << " Hz, 2 kB T/h = " << rhs / constants::h << " Hz)";
  r.messages.push_back(msg.str());

  return r;
}

QubitSolution analyze(const CircuitSpec& circuit, const AnalyzeOptions& options) {
  circuit.validate();
  require(options.n_levels >= 3 && options.n_levels <= 10, errc::invalid_argument,
          "analyze: n_levels must lie in [3, 10]");

  const double c0 = linearized_capacitance(circuit.network);
  const PotentialFn potential = [&network = circuit.network](double q) {
    return energy_of_charge(network, q);
  };

  QubitSolution sol;
  sol.spectrum = solve_charge_basis(potential, circuit.inductance, options.n_levels,
                                    options.grid, c0, options.tolerance);

  const double w01 = (sol.spectrum.levels[1] - sol.spectrum.levels[0]) / constants::hbar;
  const double w12 = (sol.spectrum.levels[2] - sol.spectrum.levels[1]) / constants::hbar;
  sol.f_actual = w01 / (2.0 * std::numbers::pi);
  sol.anharmonicity_pct = 100.0 * (w01 - w12) / w01;
  sol.f_linearized = circuit.linearized_frequency();
  sol.tau = extract_tau(sol.spectrum, 2.0 * std::numbers::pi * sol.f_linearized);
  const auto [v_zp, n_zp] = zero_point(circuit, sol.spectrum, options.zp_rule);
  sol.v_zp = v_zp;
  sol.n_zp = n_zp;
  sol.feasible =
      check_feasibility(circuit, options.puddle_density, options.puddle_depth, sol.f_actual);
  return sol;
}

}  // namespace cqd

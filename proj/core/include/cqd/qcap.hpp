#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace cqd {

/// Graphene quantum-capacitance parameters. The effective Fermi velocity used
/// everywhere is fermi_velocity * vf_scale (vf_scale ~ 1/7 models the
/// magic-angle bilayer variant). stub_capacitance is a test seam that replaces
/// the voltage-dependent capacitance by a fixed linear value.
struct QCapModel {
  double area = 0.0;             // S [m^2]
  double temperature = 0.0;      // T [K]
  double fermi_velocity = 1.0e6; // vF [m/s]
  double vf_scale = 1.0;         // dimensionless, (0, 1]
  std::optional<double> stub_capacitance{};  // [F]

  double effective_velocity() const { return fermi_velocity * vf_scale; }
  double thermal_voltage() const;  // 2 k_B T / e [V]
  void validate() const;
};

/// Differential capacitance C_Q(V) [F]. Strictly positive, even in V,
/// nondecreasing in |V|; evaluated through an exact logarithmic identity so it
/// never overflows. NaN input -> invalid-argument.
double cq_of_voltage(const QCapModel& model, double voltage);

/// C_Q(0) (or the stub value when the test seam is active).
double cq_zero_bias(const QCapModel& model);

/// Lazily built, auto-extending tabulation of the charge and stored energy of
/// the quantum capacitor versus voltage. Interior grids use composite Simpson
/// on uniform panels; queries use shape-preserving cubic Hermite interpolation
/// with analytic slopes, and the inverse map adds one Newton polish.
///
/// Thread safety: extension is build-then-swap behind a mutex, so concurrent
/// readers observe either the old or the extended table, never a partial one.
class ChargeVoltageTable {
 public:
  explicit ChargeVoltageTable(QCapModel model);

  /// Q(V) = integral of C_Q from 0 to V. Odd, strictly increasing.
  double charge_of_voltage(double voltage) const;

  /// Inverse of charge_of_voltage; round-trips to <= 1e-9 relative.
  double voltage_of_charge(double charge) const;

  /// Stored energy of the bare quantum capacitor at node voltage V.
  double energy_of_voltage(double voltage) const;

  /// energy at charge Q of the bare quantum capacitor (single table pass).
  double energy_of_charge(double charge) const;

  struct Snapshot {
    std::vector<double> voltages;  // strictly increasing, symmetric about 0
    std::vector<double> charges;   // odd, strictly increasing
    std::vector<double> energies;  // even, nonnegative, convex
  };
  Snapshot snapshot() const;

  const QCapModel& model() const { return model_; }

  struct Data;

 private:
  std::shared_ptr<const Data> acquire(double need_voltage, double need_charge) const;

  QCapModel model_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Data> data_;
};

/// Quantum capacitor with optional linear series and parallel companions.
struct CapacitorNetwork {
  QCapModel qcap{};
  std::optional<double> series_cs{};    // [F]
  std::optional<double> parallel_cp{};  // [F]
  std::shared_ptr<ChargeVoltageTable> table{};

  static CapacitorNetwork make(QCapModel model, std::optional<double> series_cs = {},
                               std::optional<double> parallel_cp = {});
  void validate() const;
  const ChargeVoltageTable& charge_table() const;
};

/// Zero-bias linearized capacitance: C_Q(0) parallel with C_P, then in series
/// with C_S. Equals 1/E''(0) of energy_of_charge.
double linearized_capacitance(const CapacitorNetwork& network);

/// Voltage across the (quantum capacitor || C_P) node when the network holds
/// total charge Q. Without C_P this is the inverse charge map itself.
double node_voltage(const CapacitorNetwork& network, double charge);

/// Total stored energy at charge Q: the node contribution plus Q^2/(2 C_S)
/// when a series capacitor is present. Even, zero at zero, convex.
double energy_of_charge(const CapacitorNetwork& network, double charge);

/// One-shot conveniences that build a transient table; prefer
/// ChargeVoltageTable for repeated queries.
double charge_of_voltage(const QCapModel& model, double voltage);
double voltage_of_charge(const QCapModel& model, double charge);

}  // namespace cqd

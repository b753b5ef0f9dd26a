#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cqd/qubit_design.hpp"

namespace cqd {

enum class Quantity { f_actual, anharmonicity, tau, v_zp, n_zp };

std::optional<Quantity> quantity_from_name(std::string_view name);
std::string_view quantity_column(Quantity q);
std::vector<Quantity> all_quantities();

/// Everything that defines a circuit except temperature and area, so a sweep
/// can stamp out one CircuitSpec per grid point. Exactly one of inductance or
/// design_frequency must be set; with design_frequency the inductor is
/// re-designed at every point.
struct CircuitTemplate {
  double fermi_velocity = 1.0e6;
  double vf_scale = 1.0;
  bool linear_stub = false;  // replace the QC by a fixed capacitor at C_Q(0)
  std::optional<double> series_cs{};
  std::optional<double> parallel_cp{};
  std::optional<double> inductance{};
  std::optional<double> design_frequency{};
  AnalyzeOptions options{};

  CircuitSpec instantiate(double area, double temperature) const;
  void validate() const;
};

struct SweepSpec {
  std::vector<double> temperatures;  // strictly increasing, within (0, 1] K
  std::vector<double> areas;         // strictly increasing, within (0, 1e-4] m^2
  CircuitTemplate circuit{};
  std::vector<Quantity> quantities;  // non-empty
  int jobs = 1;

  void validate() const;
};

struct SweepRow {
  double temperature = 0.0;
  double area = 0.0;
  bool ok = false;
  std::string error;
  std::optional<double> f_actual;
  std::optional<double> anharmonicity_pct;
  std::optional<double> tau;
  std::optional<double> v_zp;
  std::optional<double> n_zp;
};

/// One row per grid point, temperature-major then area. Rows are evaluated
/// independently (optionally in parallel) and merged in deterministic order;
/// per-row failures are recorded in the row, and only an all-rows-failed sweep
/// raises an error.
std::vector<SweepRow> sweep(const SweepSpec& spec);

struct SensitivityReport {
  double t0 = 0.0;                // [K]
  double step_used = 0.0;         // [K]
  double f_at_t0 = 0.0;           // [Hz]
  double a_pct_at_t0 = 0.0;       // [%]
  double df_dT = 0.0;             // [Hz/K]
  double dA_dT = 0.0;             // [%/K]
  double s_f_t_pct = 0.0;         // (df_dT * T/f) * 100
  double s_a_t_pct = 0.0;         // (dA_dT * T/A) * 100
  double richardson_error = 0.0;  // relative, from the half-step check
  double a_temperature_exponent = 0.0;  // d log A / d log T over [T0, 4 T0]
};

/// Central finite differences of f_actual and anharmonicity versus
/// temperature at fixed inductance, with a half-step Richardson check.
SensitivityReport sensitivities(const CircuitSpec& circuit, double t0, double dt = 1e-3);

/// One row of the bundled reference designs next to this toolkit's result.
struct ReferenceRow {
  int table_id = 0;
  double area = 0.0;          // [m^2]
  double design_frequency = 0.0;  // [Hz]
  double temperature = 0.0;   // [K]
  std::optional<double> series_cs;  // [F]
  double ref_actual_f = 0.0;        // [Hz]
  double ref_anharmonicity_pct = 0.0;
  double actual_f = 0.0;
  double anharmonicity_pct = 0.0;
  double f_rel_dev = 0.0;  // (computed - reference)/reference
  double a_ratio = 0.0;    // computed / reference
};

/// Recomputes the bundled reference design tables (ids 1, 2, 3) and reports
/// deviations as data, never as errors.
std::vector<ReferenceRow> reproduce_tables(std::span<const int> which,
                                           const AnalyzeOptions& options = {});

// ---------------------------------------------------------------------------
// Emission

using Value = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

enum class EmitFormat { csv, json };

/// CSV: RFC-4180 quoting, '.' decimal separator, scientific notation with
/// nine significant digits. JSON: array of objects with snake_case keys.
/// Byte-identical output for identical inputs.
void emit(const DataTable& table, EmitFormat format, std::ostream& out);
void emit_file(const DataTable& table, EmitFormat format, const std::string& path);

DataTable to_table(std::span<const SweepRow> rows, std::span<const Quantity> quantities);
DataTable to_table(std::span<const ReferenceRow> rows);
DataTable to_table(const SensitivityReport& report);

}  // namespace cqd

#include "cqd/qcap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cqd/constants.hpp"
#include "cqd/errors.hpp"
#include "cqd/interp.hpp"
#include "cqd/quadrature.hpp"

namespace cqd {

namespace {
constexpr int kPanelsPerSegment = 4096;
constexpr double kInitialSpanThermal = 40.0;  // first segment covers |x| <= 40
constexpr int kMaxSegments = 64;
}  // namespace

double QCapModel::thermal_voltage() const {
  return 2.0 * constants::k_B * temperature / constants::e;
}

void QCapModel::validate() const {
  require(std::isfinite(area) && area > 0.0, errc::invalid_argument,
          "QCapModel: area must be finite and > 0");
  require(std::isfinite(temperature) && temperature > 0.0, errc::invalid_argument,
          "QCapModel: temperature must be finite and > 0");
  require(std::isfinite(fermi_velocity) && fermi_velocity > 0.0, errc::invalid_argument,
          "QCapModel: fermi_velocity must be finite and > 0");
  require(std::isfinite(vf_scale) && vf_scale > 0.0 && vf_scale <= 1.0, errc::invalid_argument,
          "QCapModel: vf_scale must lie in (0, 1]");
  if (stub_capacitance) {
    require(std::isfinite(*stub_capacitance) && *stub_capacitance > 0.0, errc::invalid_argument,
            "QCapModel: stub_capacitance must be finite and > 0");
  }
}

namespace {

double cq_prefactor(const QCapModel& m) {
  const double hv = constants::hbar * m.effective_velocity();
  return 2.0 * constants::e * constants::e * m.area * constants::k_B * m.temperature /
         (std::numbers::pi * hv * hv);
}

// ln[2 (1 + cosh x)] = |x| + 2 ln(1 + exp(-|x|)), exact for all x.
double log_two_one_plus_cosh(double x) {
  const double ax = std::abs(x);
  return ax + 2.0 * std::log1p(std::exp(-ax));
}

double cq_eval(const QCapModel& m, double pref, double voltage) {
  if (m.stub_capacitance) return *m.stub_capacitance;
  const double x = voltage / m.thermal_voltage();  // e V / (2 k_B T)
  return pref * log_two_one_plus_cosh(x);
}

}  // namespace

double cq_of_voltage(const QCapModel& model, double voltage) {
  model.validate();
  require(!std::isnan(voltage), errc::invalid_argument, "cq_of_voltage: voltage is NaN");
  return cq_eval(model, model.stub_capacitance ? 0.0 : cq_prefactor(model), voltage);
}

double cq_zero_bias(const QCapModel& model) {
  model.validate();
  if (model.stub_capacitance) return *model.stub_capacitance;
  return cq_prefactor(model) * std::log(4.0);
}

// ---------------------------------------------------------------------------
// ChargeVoltageTable

struct ChargeVoltageTable::Data {
  QCapModel model;
  double pref = 0.0;
  // Nonnegative side only; v[0] = 0. Q is odd and E even in voltage.
  std::vector<double> v;      // node voltages
  std::vector<double> c;      // C_Q at nodes (slope of q)
  std::vector<double> q;      // cumulative charge
  std::vector<double> e;      // cumulative energy
  std::vector<double> inv_c;  // slope of v(q)
  std::vector<double> de;     // slope of e(v) = v * c

  double max_v() const { return v.back(); }
  double max_q() const { return q.back(); }

  double q_of_v(double voltage) const {
    const double av = std::abs(voltage);
    const double out = monotone_hermite(v, q, c, av);
    return std::copysign(out, voltage);
  }

  double e_of_v(double voltage) const { return monotone_hermite(v, e, de, std::abs(voltage)); }

  double v_of_q(double charge) const {
    const double aq = std::abs(charge);
    double vv = monotone_hermite(q, v, inv_c, aq);
    // One Newton polish with the analytic capacitance restores near-machine
    // accuracy of the inverse.
    vv -= (monotone_hermite(v, q, c, vv) - aq) / cq_eval(model, pref, vv);
    return std::copysign(vv, charge);
  }
};

namespace {

// Appends one uniform segment [v_from, v_to] (kPanelsPerSegment panels) to the
// arrays in `d`, continuing the cumulative integrals.
void append_segment(ChargeVoltageTable::Data& d, double v_from, double v_to) {
  const int n = kPanelsPerSegment;
  const double h = (v_to - v_from) / n;
  std::vector<double> cs(n + 1), es_integrand(n + 1);
  std::vector<double> vs(n + 1);
  for (int i = 0; i <= n; ++i) {
    vs[i] = v_from + h * i;
    cs[i] = cq_eval(d.model, d.pref, vs[i]);
    es_integrand[i] = vs[i] * cs[i];
  }
  const std::vector<double> qs = cumulative_integral(cs, h);
  const std::vector<double> es = cumulative_integral(es_integrand, h);
  const double q0 = d.q.empty() ? 0.0 : d.q.back();
  const double e0 = d.e.empty() ? 0.0 : d.e.back();
  const int skip = d.v.empty() ? 0 : 1;  // first node coincides with previous tail
  for (int i = skip; i <= n; ++i) {
    d.v.push_back(vs[i]);
    d.c.push_back(cs[i]);
    d.q.push_back(q0 + qs[i]);
    d.e.push_back(e0 + es[i]);
    d.inv_c.push_back(1.0 / cs[i]);
    d.de.push_back(vs[i] * cs[i]);
  }
}

std::shared_ptr<const ChargeVoltageTable::Data> build_table(
    const QCapModel& model, const ChargeVoltageTable::Data* previous, double need_voltage,
    double need_charge) {
  auto d = std::make_shared<ChargeVoltageTable::Data>();
  d->model = model;
  d->pref = model.stub_capacitance ? 0.0 : cq_prefactor(model);
  if (previous) *d = *previous;

  int segments = 0;
  while (d->v.empty() || d->max_v() < need_voltage || d->max_q() < need_charge) {
    require(++segments <= kMaxSegments, errc::numeric_domain,
            "ChargeVoltageTable: table extension did not reach the requested range");
    const double from = d->v.empty() ? 0.0 : d->max_v();
    const double to = d->v.empty() ? kInitialSpanThermal * model.thermal_voltage() : 2.0 * from;
    require(std::isfinite(to) && to > from, errc::numeric_domain,
            "ChargeVoltageTable: non-finite growth during table extension");
    append_segment(*d, from, to);
    require(std::isfinite(d->max_q()) && std::isfinite(d->e.back()), errc::numeric_domain,
            "ChargeVoltageTable: non-finite growth during table extension");
  }
  return d;
}

}  // namespace

ChargeVoltageTable::ChargeVoltageTable(QCapModel model) : model_(std::move(model)) {
  model_.validate();
  data_ = build_table(model_, nullptr, 0.0, 0.0);
}

std::shared_ptr<const ChargeVoltageTable::Data> ChargeVoltageTable::acquire(
    double need_voltage, double need_charge) const {
  std::shared_ptr<const Data> snap;
  {
    std::lock_guard<std::mutex> lock(mu_);
    snap = data_;
  }
  if (snap->max_v() >= need_voltage && snap->max_q() >= need_charge) return snap;
  std::lock_guard<std::mutex> lock(mu_);
  if (data_->max_v() < need_voltage || data_->max_q() < need_charge) {
    data_ = build_table(model_, data_.get(), need_voltage, need_charge);
  }
  return data_;
}

double ChargeVoltageTable::charge_of_voltage(double voltage) const {
  require(std::isfinite(voltage), errc::invalid_argument,
          "charge_of_voltage: voltage must be finite");
  if (voltage == 0.0) return 0.0;
  return acquire(std::abs(voltage), 0.0)->q_of_v(voltage);
}

double ChargeVoltageTable::voltage_of_charge(double charge) const {
  require(std::isfinite(charge), errc::invalid_argument,
          "voltage_of_charge: charge must be finite");
  if (charge == 0.0) return 0.0;
  return acquire(0.0, std::abs(charge))->v_of_q(charge);
}

double ChargeVoltageTable::energy_of_voltage(double voltage) const {
  require(std::isfinite(voltage), errc::invalid_argument,
          "energy_of_voltage: voltage must be finite");
  if (voltage == 0.0) return 0.0;
  return acquire(std::abs(voltage), 0.0)->e_of_v(voltage);
}

double ChargeVoltageTable::energy_of_charge(double charge) const {
  require(std::isfinite(charge), errc::invalid_argument,
          "energy_of_charge: charge must be finite");
  if (charge == 0.0) return 0.0;
  const auto d = acquire(0.0, std::abs(charge));
  return d->e_of_v(d->v_of_q(charge));
}

ChargeVoltageTable::Snapshot ChargeVoltageTable::snapshot() const {
  std::shared_ptr<const Data> d;
  {
    std::lock_guard<std::mutex> lock(mu_);
    d = data_;
  }
  Snapshot s;
  const std::size_t n = d->v.size();
  s.voltages.reserve(2 * n - 1);
  s.charges.reserve(2 * n - 1);
  s.energies.reserve(2 * n - 1);
  for (std::size_t i = n; i-- > 1;) {
    s.voltages.push_back(-d->v[i]);
    s.charges.push_back(-d->q[i]);
    s.energies.push_back(d->e[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    s.voltages.push_back(d->v[i]);
    s.charges.push_back(d->q[i]);
    s.energies.push_back(d->e[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// CapacitorNetwork

CapacitorNetwork CapacitorNetwork::make(QCapModel model, std::optional<double> series_cs,
                                        std::optional<double> parallel_cp) {
  CapacitorNetwork net;
  net.qcap = std::move(model);
  net.series_cs = series_cs;
  net.parallel_cp = parallel_cp;
  net.validate();
  net.table = std::make_shared<ChargeVoltageTable>(net.qcap);
  return net;
}

void CapacitorNetwork::validate() const {
  qcap.validate();
  if (series_cs) {
    require(std::isfinite(*series_cs) && *series_cs > 0.0, errc::invalid_argument,
            "CapacitorNetwork: series_cs must be finite and > 0");
  }
  if (parallel_cp) {
    require(std::isfinite(*parallel_cp) && *parallel_cp > 0.0, errc::invalid_argument,
            "CapacitorNetwork: parallel_cp must be finite and > 0");
  }
}

const ChargeVoltageTable& CapacitorNetwork::charge_table() const {
  require(table != nullptr, errc::invalid_argument,
          "CapacitorNetwork: not initialized; construct with CapacitorNetwork::make");
  return *table;
}

double linearized_capacitance(const CapacitorNetwork& network) {
  network.validate();
  double c = cq_zero_bias(network.qcap);
  if (network.parallel_cp) c += *network.parallel_cp;
  if (network.series_cs) c = 1.0 / (1.0 / c + 1.0 / *network.series_cs);
  return c;
}

double node_voltage(const CapacitorNetwork& network, double charge) {
  require(std::isfinite(charge), errc::invalid_argument, "node_voltage: charge must be finite");
  const ChargeVoltageTable& tab = network.charge_table();
  if (!network.parallel_cp) return tab.voltage_of_charge(charge);
  if (charge == 0.0) return 0.0;

  // Solve q_qc(V) + C_P V = Q. The left side is strictly increasing with slope
  // at least C_Q(0) + C_P, so Q/(C_Q(0)+C_P) brackets the root from above.
  const double cp = *network.parallel_cp;
  const double aq = std::abs(charge);
  const double c0 = cq_zero_bias(network.qcap);
  double lo = 0.0, hi = aq / (c0 + cp);
  double vv = hi;
  bool converged = false;
  for (int iter = 0; iter < 200; ++iter) {
    const double f = tab.charge_of_voltage(vv) + cp * vv - aq;
    if (std::abs(f) <= 1e-15 * aq) {
      converged = true;
      break;
    }
    if (f > 0.0) {
      hi = vv;
    } else {
      lo = vv;
    }
    const double df = cq_of_voltage(network.qcap, vv) + cp;
    double next = vv - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == vv) {
      converged = true;
      break;
    }
    vv = next;
  }
  require(converged, errc::numeric_domain, "node_voltage: root finding did not converge");
  return std::copysign(vv, charge);
}

double energy_of_charge(const CapacitorNetwork& network, double charge) {
  require(std::isfinite(charge), errc::invalid_argument,
          "energy_of_charge: charge must be finite");
  if (charge == 0.0) return 0.0;
  const ChargeVoltageTable& tab = network.charge_table();
  double energy = 0.0;
  if (network.parallel_cp) {
    const double vv = node_voltage(network, charge);
    energy = tab.energy_of_voltage(vv) + 0.5 * *network.parallel_cp * vv * vv;
  } else {
    energy = tab.energy_of_charge(charge);
  }
  if (network.series_cs) energy += charge * charge / (2.0 * *network.series_cs);
  return energy;
}

double charge_of_voltage(const QCapModel& model, double voltage) {
  return ChargeVoltageTable(model).charge_of_voltage(voltage);
}

double voltage_of_charge(const QCapModel& model, double charge) {
  return ChargeVoltageTable(model).voltage_of_charge(charge);
}

}  // namespace cqd

#include "cqd/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "cqd/constants.hpp"
#include "cqd/errors.hpp"
#include "cqd/tridiag.hpp"

namespace cqd {

void GridSpec::validate() const {
  require(n_points >= 201 && n_points % 2 == 1, errc::invalid_argument,
          "GridSpec: n_points must be odd and >= 201");
  if (!auto_domain) {
    require(std::isfinite(q_min) && std::isfinite(q_max) && q_min < 0.0 && q_max > 0.0,
            errc::invalid_argument, "GridSpec: explicit domain must satisfy q_min < 0 < q_max");
  }
}

void KerrParams::validate() const {
  require(std::isfinite(omega) && omega > 0.0, errc::invalid_argument,
          "KerrParams: omega must be finite and > 0");
  require(std::isfinite(alpha), errc::invalid_argument, "KerrParams: alpha must be finite");
  require(std::isfinite(tau) && tau >= 0.0, errc::invalid_argument,
          "KerrParams: tau must be finite and >= 0");
  require(n_trunc >= 20, errc::invalid_argument, "KerrParams: n_trunc must be >= 20");
}

namespace {

std::vector<double> fd_levels_given(const std::vector<double>& u, double kinetic_coeff, double h,
                                    int k) {
  const int n = static_cast<int>(u.size());
  const double t = kinetic_coeff / (h * h);
  std::vector<double> diag(n), off(n - 1, -t);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * t + u[i];
  return lowest_eigenvalues(diag, off, k);
}

std::vector<double> sample_potential(const PotentialFn& potential, double q_min, double q_max,
                                     int n_points) {
  std::vector<double> u(n_points);
  const double h = (q_max - q_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double val = potential(q_min + h * i);
    require(std::isfinite(val), errc::numeric_domain,
            "fd_levels: potential evaluated to a non-finite value");
    u[i] = val;
  }
  return u;
}

// Midpoint refinement: the doubled grid keeps every existing node.
std::vector<double> refine_samples(const PotentialFn& potential, const std::vector<double>& u,
                                   double q_min, double h_new) {
  std::vector<double> out(2 * u.size() - 1);
  for (std::size_t i = 0; i < u.size(); ++i) out[2 * i] = u[i];
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double val = potential(q_min + h_new * (2 * i + 1));
    require(std::isfinite(val), errc::numeric_domain,
            "fd_levels: potential evaluated to a non-finite value");
    out[2 * i + 1] = val;
  }
  return out;
}

}  // namespace

std::vector<double> fd_levels(const PotentialFn& potential, double kinetic_coeff, double q_min,
                              double q_max, int n_points, int k) {
  require(kinetic_coeff > 0.0 && std::isfinite(kinetic_coeff), errc::invalid_argument,
          "fd_levels: kinetic coefficient must be finite and > 0");
  require(q_min < q_max, errc::invalid_argument, "fd_levels: empty domain");
  require(n_points >= 3, errc::invalid_argument, "fd_levels: need at least 3 grid points");
  require(k >= 1 && k <= n_points - 2, errc::invalid_argument, "fd_levels: bad level count");
  const double h = (q_max - q_min) / (n_points - 1);
  return fd_levels_given(sample_potential(potential, q_min, q_max, n_points), kinetic_coeff, h, k);
}

RefinedLevels fd_levels_refined(const PotentialFn& potential, double kinetic_coeff, double q_min,
                                double q_max, int n_points, int k, double tol,
                                int max_doublings) {
  double h = (q_max - q_min) / (n_points - 1);
  std::vector<double> u = sample_potential(potential, q_min, q_max, n_points);
  std::vector<double> levels = fd_levels_given(u, kinetic_coeff, h, k);

  RefinedLevels result;
  result.converged = false;
  result.refinement_error = std::numeric_limits<double>::infinity();
  for (int d = 0; d < max_doublings; ++d) {
    h *= 0.5;
    n_points = 2 * n_points - 1;
    u = refine_samples(potential, u, q_min, h);
    std::vector<double> next = fd_levels_given(u, kinetic_coeff, h, k);
    double err = 0.0;
    for (int i = 0; i < k; ++i) {
      err = std::max(err, std::abs(next[i] - levels[i]) / std::abs(next[i]));
    }
    levels = std::move(next);
    result.refinement_error = err;
    if (err <= tol) {
      result.converged = true;
      break;
    }
  }
  result.levels = std::move(levels);
  result.n_points = n_points;
  return result;
}

double probe_linear_capacitance(const PotentialFn& potential, double inductance) {
  require(std::isfinite(inductance) && inductance > 0.0, errc::invalid_circuit,
          "probe_linear_capacitance: inductance must be finite and > 0");
  // Curvature probe with a step iterated toward a fraction of the zero-point
  // charge implied by the current estimate.
  double step = 1e-18;
  double cap = 0.0;
  for (int iter = 0; iter < 6; ++iter) {
    const double curv = potential(step) + potential(-step);
    require(std::isfinite(curv) && curv > 0.0, errc::invalid_circuit,
            "probe_linear_capacitance: potential has no positive curvature at zero");
    const double next = step * step / curv;
    const double omega = 1.0 / std::sqrt(inductance * next);
    const double q_ref = std::sqrt(constants::hbar / (2.0 * inductance * omega));
    const double new_step = 0.05 * q_ref;
    const bool settled = cap > 0.0 && std::abs(next - cap) <= 1e-9 * next;
    cap = next;
    step = new_step;
    if (settled) break;
  }
  require(std::isfinite(cap) && cap > 0.0, errc::invalid_circuit,
          "probe_linear_capacitance: curvature probe failed");
  return cap;
}

GridSpec auto_domain(const PotentialFn& potential, double inductance, int n_levels,
                     std::optional<double> linear_capacitance) {
  require(n_levels >= 1, errc::invalid_argument, "auto_domain: n_levels must be >= 1");
  const double cap =
      linear_capacitance ? *linear_capacitance : probe_linear_capacitance(potential, inductance);
  const Scaling s = make_scaling(inductance, cap);
  const double target = (n_levels + 2.5) * s.energy_ref;

  // Bracket the classical turning point, then bisect.
  double hi = 2.0 * std::sqrt(n_levels + 2.5) + 1.0;  // harmonic guess, scaled units
  int grow = 0;
  while (potential(s.unscale_charge(hi)) < target) {
    hi *= 2.0;
    require(++grow <= 200 && std::isfinite(hi), errc::numeric_domain,
            "auto_domain: turning point search diverged");
  }
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (potential(s.unscale_charge(mid)) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double q_t = 0.5 * (lo + hi);
  require(q_t > 0.0 && std::isfinite(q_t), errc::numeric_domain,
          "auto_domain: turning point search failed");

  GridSpec grid;
  grid.n_points = 2001;
  grid.q_max = 1.5 * q_t;
  grid.q_min = -grid.q_max;
  grid.auto_domain = false;
  return grid;
}

Spectrum solve_charge_basis(const PotentialFn& potential, double inductance, int n_levels,
                            const GridSpec& grid, std::optional<double> linear_capacitance,
                            double tol) {
  require(n_levels >= 1 && n_levels <= 10, errc::invalid_argument,
          "solve_charge_basis: n_levels must lie in [1, 10]");
  grid.validate();
  const double cap =
      linear_capacitance ? *linear_capacitance : probe_linear_capacitance(potential, inductance);
  const Scaling s = make_scaling(inductance, cap);

  GridSpec g = grid;
  if (grid.auto_domain) {
    g = auto_domain(potential, inductance, n_levels, cap);
    g.n_points = grid.n_points;
  }

  const PotentialFn scaled = [&](double q) {
    return s.scale_energy(potential(s.unscale_charge(q)));
  };
  const RefinedLevels r =
      fd_levels_refined(scaled, 1.0, g.q_min, g.q_max, g.n_points, n_levels, tol);

  Spectrum out;
  out.n_levels = n_levels;
  out.converged = r.converged;
  out.refinement_error = r.refinement_error;
  out.levels.reserve(n_levels);
  for (double v : r.levels) out.levels.push_back(s.unscale_energy(v));
  for (int i = 1; i < n_levels; ++i) {
    require(out.levels[i] > out.levels[i - 1], errc::solver_failure,
            "solve_charge_basis: eigenvalues are not strictly increasing");
  }
  return out;
}

namespace {

// Exact matrix of X^4 (X = a + a^dag) restricted to the lowest n states:
// computed in a basis padded by four states so every retained element is free
// of truncation error.
Eigen::MatrixXd x4_matrix(int n) {
  const int m = n + 4;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i) {
    const double v = std::sqrt(static_cast<double>(i + 1));
    x(i, i + 1) = v;
    x(i + 1, i) = v;
  }
  const Eigen::MatrixXd x2 = x * x;
  return (x2 * x2).topLeftCorner(n, n);
}

std::vector<double> kerr_levels(double g, int n_trunc, int n_levels) {
  Eigen::MatrixXd h = g * x4_matrix(n_trunc);
  for (int i = 0; i < n_trunc; ++i) h(i, i) += i + 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, errc::solver_failure,
          "solve_fock_kerr: dense eigensolver failed");
  std::vector<double> out(n_levels);
  for (int i = 0; i < n_levels; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

}  // namespace

Spectrum solve_fock_kerr(const KerrParams& params, int n_levels) {
  params.validate();
  require(n_levels >= 1, errc::invalid_argument, "solve_fock_kerr: n_levels must be >= 1");
  require(n_levels + 10 <= params.n_trunc, errc::invalid_argument,
          "solve_fock_kerr: n_trunc too small for requested levels (need n_levels + 10)");

  const double g = 0.25 * (params.alpha - params.omega * params.tau);
  const std::vector<double> coarse = kerr_levels(g, params.n_trunc, n_levels);
  const std::vector<double> fine = kerr_levels(g, 2 * params.n_trunc, n_levels);

  double err = 0.0;
  for (int i = 0; i < n_levels; ++i) {
    err = std::max(err, std::abs(fine[i] - coarse[i]) / std::abs(fine[i]));
  }
  require(err <= 1e-8, errc::solver_failure,
          "solve_fock_kerr: truncation not converged; increase n_trunc");

  Spectrum out;
  out.n_levels = n_levels;
  out.converged = true;
  out.refinement_error = err;
  out.levels.reserve(n_levels);
  const double e_ref = constants::hbar * params.omega;
  for (double v : fine) out.levels.push_back(v * e_ref);
  return out;
}

}  // namespace cqd

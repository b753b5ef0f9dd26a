#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cqd {

/// Cumulative integral of samples f on a uniform grid of spacing h, starting
/// at 0. Even-index nodes use composite Simpson pairs; odd-index nodes use the
/// locally fourth-order half-panel rule  h/12 * (5 f_{i-1} + 8 f_i - f_{i+1}).
/// The final node of an odd-length tail falls back to the trapezoid rule.
inline std::vector<double> cumulative_integral(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  for (std::size_t i = 1; i < n; ++i) {
    if (i % 2 == 0) {
      out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    } else if (i + 1 < n) {
      out[i] = out[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      out[i] = out[i - 1] + h / 2.0 * (f[i - 1] + f[i]);
    }
  }
  return out;
}

}  // namespace cqd

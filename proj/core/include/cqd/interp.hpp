#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

namespace cqd {

/// Index i with xs[i] <= xq < xs[i+1], clamped to the last interval at the
/// upper end. xs must be strictly increasing with size >= 2.
inline std::size_t bracket(std::span<const double> xs, double xq) {
  auto it = std::upper_bound(xs.begin(), xs.end(), xq);
  std::ptrdiff_t i = (it - xs.begin()) - 1;
  i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(xs.size()) - 2);
  return static_cast<std::size_t>(i);
}

/// Shape-preserving cubic Hermite interpolation with prescribed nodal slopes.
/// Slopes are limited to three times the interval secant (Fritsch-Carlson),
/// which keeps the interpolant monotone on monotone data.
inline double monotone_hermite(std::span<const double> xs, std::span<const double> ys,
                               std::span<const double> ds, double xq) {
  const std::size_t i = bracket(xs, xq);
  const double h = xs[i + 1] - xs[i];
  const double delta = (ys[i + 1] - ys[i]) / h;
  auto limit = [delta](double d) {
    if (delta == 0.0) return 0.0;
    if (d * delta < 0.0) return 0.0;
    return (std::abs(d) > 3.0 * std::abs(delta)) ? 3.0 * delta : d;
  };
  const double d0 = limit(ds[i]);
  const double d1 = limit(ds[i + 1]);
  const double t = (xq - xs[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * ys[i] + h10 * h * d0 + h01 * ys[i + 1] + h11 * h * d1;
}

}  // namespace cqd

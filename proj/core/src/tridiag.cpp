#include "cqd/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cqd/errors.hpp"

namespace cqd {

namespace detail {

int sturm_count(std::span<const double> diag, std::span<const double> off2, double x,
                double pivmin) {
  int count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (std::abs(q) < pivmin) q = (q < 0.0) ? -pivmin : pivmin;
    q = diag[i] - x - off2[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace detail

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> off, int k) {
  const std::size_t n = diag.size();
  require(n >= 1 && off.size() + 1 == n, errc::invalid_argument,
          "lowest_eigenvalues: off-diagonal must have size n-1");
  require(k >= 1 && static_cast<std::size_t>(k) <= n, errc::invalid_argument,
          "lowest_eigenvalues: requested count out of range");

  std::vector<double> off2(n > 1 ? n - 1 : 0);
  double max_off2 = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    off2[i] = off[i] * off[i];
    max_off2 = std::max(max_off2, off2[i]);
  }
  const double safmin = std::numeric_limits<double>::min();
  const double pivmin = std::max(safmin, safmin * max_off2);

  // Gershgorin bounds.
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double span = hi - lo;
  lo -= 1e-12 * std::abs(lo) + 1e-300;
  hi += 1e-12 * std::abs(hi) + 1e-300;

  std::vector<double> vals(k);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int j = 0; j < k; ++j) {
    // Smallest x with count(x) >= j+1; eigenvalues below already found give a
    // tighter lower bracket.
    double a = (j == 0) ? lo : vals[j - 1];
    double b = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      const double width = b - a;
      if (width <= 2.0 * eps * std::max(std::abs(a), std::abs(b)) + pivmin ||
          width <= 1e-18 * span) {
        break;
      }
      if (detail::sturm_count(diag, off2, mid, pivmin) >= j + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    vals[j] = 0.5 * (a + b);
  }
  return vals;
}

}  // namespace cqd

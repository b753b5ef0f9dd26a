#pragma once

#include <span>
#include <vector>

namespace cqd {

/// Lowest `k` eigenvalues (ascending) of the symmetric tridiagonal matrix with
/// diagonal `diag` (size n) and off-diagonal `off` (size n-1), computed by
/// Sturm-sequence bisection. O(k * n * iterations); no allocation beyond the
/// result. Throws solver-failure if bisection cannot separate the spectrum.
std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> off, int k);

namespace detail {
/// Number of eigenvalues strictly below x (Sturm count with pivot guarding).
int sturm_count(std::span<const double> diag, std::span<const double> off2, double x,
                double pivmin);
}  // namespace detail

}  // namespace cqd

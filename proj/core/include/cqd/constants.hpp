#pragma once

namespace cqd {

/// CODATA-2018 fundamental constants (SI). Fixed, never configurable.
struct PhysicalConstants {
  static constexpr double e = 1.602176634e-19;      // elementary charge [C]
  static constexpr double hbar = 1.054571817e-34;   // reduced Planck constant [J s]
  static constexpr double k_B = 1.380649e-23;       // Boltzmann constant [J/K]
  static constexpr double h = 6.62607015e-34;       // Planck constant [J s]
};

namespace constants {
inline constexpr double e = PhysicalConstants::e;
inline constexpr double hbar = PhysicalConstants::hbar;
inline constexpr double k_B = PhysicalConstants::k_B;
inline constexpr double h = PhysicalConstants::h;
}  // namespace constants

}  // namespace cqd

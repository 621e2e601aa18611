#pragma once

namespace rotent {

// CODATA 2018 exact/recommended values, SI units.
struct PhysicalConstants {
  double c = 299792458.0;          // m/s
  double hbar = 1.054571817e-34;   // J s
  double kB = 1.380649e-23;        // J/K
};

inline constexpr PhysicalConstants kCodata{};

}  // namespace rotent

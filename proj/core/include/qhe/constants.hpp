#pragma once

namespace qhe {

struct PhysicalConstants {
  double hbar;  // J s
  double k_B;   // J / K
};

// CODATA 2018 exact / recommended values.
inline constexpr PhysicalConstants kCodata2018{1.054571817e-34, 1.380649e-23};

// hbar = k_B = 1; combine with unit mass for fully reduced units.
inline constexpr PhysicalConstants kReducedUnits{1.0, 1.0};

inline constexpr double kElectronMass = 9.1093837015e-31;  // kg
inline constexpr double kNanometre = 1e-9;                   // m

}  // namespace qhe

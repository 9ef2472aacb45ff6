#pragma once

namespace qhe {

class WellGeometry;

/// How a position/momentum uncertainty pair was obtained.
enum class UncertaintyMode { eigenstate, thermal_exact, thermal_simplified };

/// Units in which mixed position + momentum sums are reported.
///
/// literal adds the raw SI numbers (metres plus kg m/s). scaled
/// measures position in units of the half-width L, momentum in units of
/// hbar/L and energy in units of hbar^2/(m L^2), so every sum is
/// dimensionless.
enum class SumConvention { literal, scaled };

struct UncertaintyPair {
  double delta_x = 0.0;
  double delta_p = 0.0;
  double product = 0.0;
  double sum_value = 0.0;
  UncertaintyMode mode = UncertaintyMode::eigenstate;

  static UncertaintyPair from(double delta_x, double delta_p, UncertaintyMode mode) {
    return {delta_x, delta_p, delta_x * delta_p, delta_x + delta_p, mode};
  }

  /// Re-expresses the pair in well units (x / L, p L / hbar). The product
  /// becomes dimensionless and is bounded below by 1/2.
  UncertaintyPair in_convention(const WellGeometry& geom, SumConvention convention) const;
};

}  // namespace qhe

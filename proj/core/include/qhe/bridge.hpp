#pragma once

#include "qhe/thermal.hpp"
#include "qhe/uncertainty.hpp"
#include "qhe/well.hpp"

namespace qhe {

/// Expansion guard for the uncertainty/partition-function bridge.
inline constexpr double kBridgeRegimeLimit = 0.1;

inline bool within_bridge_regime(const ThermalEnvironment& env) {
  return env.alpha_beta() < kBridgeRegimeLimit;
}

/// Offset C_T together with the entropy auxiliaries, all in well units
/// (L = 1, hbar = 1, m = 1).
struct BridgeConstants {
  double c_t = 0.0;
  double nu = 0.0;
  double gamma = 0.0;
  double at_temperature = 0.0;
};

/// -L/3 + (2L / (pi^{5/2} sqrt(ab))) (ab - sqrt(pi) ab^{3/2} - 1), in the
/// length unit of `geom`. Throws RegimeError when alpha beta >= 1.
double c_t_constant(const WellGeometry& geom, const ThermalEnvironment& env);

/// nu and gamma of the uncertainty-form entropy, evaluated in well units.
double nu_term(const ThermalEnvironment& env);
double gamma_term(const ThermalEnvironment& env);

BridgeConstants bridge_constants(const WellGeometry& geom, const ThermalEnvironment& env);

/// Delta X_T + Delta P_T + C_T. The default scaled convention keeps the
/// sum dimensionless; literal adds metres to kg m/s.
double bridge_sum(const WellGeometry& geom, const ThermalEnvironment& env,
                  SumConvention convention = SumConvention::scaled,
                  VarianceMode variance = VarianceMode::simplified);

/// (L sqrt 2 / (hbar sqrt pi)) * bridge_sum. Approximates the Gaussian
/// partition function (1/2) sqrt(pi / ab) for small alpha beta.
double partition_from_uncertainty(const WellGeometry& geom, const ThermalEnvironment& env,
                                  SumConvention convention = SumConvention::scaled,
                                  VarianceMode variance = VarianceMode::simplified);

enum class FreeEnergyForm { bridge, gaussian };

/// -k_B T ln Z in joules, with Z from the bridge or the Gaussian form.
/// The bridge form throws DomainError when its argument is not positive.
double helmholtz_free_energy(const WellGeometry& geom, const ThermalEnvironment& env,
                             FreeEnergyForm form = FreeEnergyForm::bridge);

/// k_B ln Z_bridge + hbar sqrt(pi) k_B (nu + gamma) / (sqrt 2 L beta sum),
/// in J/K, with the second term evaluated in well units.
double entropy(const WellGeometry& geom, const ThermalEnvironment& env);

/// -dF/dT by central difference with step h (kelvin).
double entropy_oracle(const WellGeometry& geom, const ThermalEnvironment& env, double h,
                      FreeEnergyForm form = FreeEnergyForm::gaussian);

}  // namespace qhe

#pragma once

#include <optional>

#include "qhe/numerics.hpp"
#include "qhe/uncertainty.hpp"
#include "qhe/well.hpp"

namespace qhe {

/// Canonical bath seen by a particular well: T, beta = 1/(k_B T) and the
/// dimensionless alpha * beta that controls every closed-form approximation.
class ThermalEnvironment {
 public:
  ThermalEnvironment(const WellGeometry& geom, double temperature);

  /// Bath whose alpha * beta takes the given value for this geometry.
  static ThermalEnvironment with_alpha_beta(const WellGeometry& geom, double alpha_beta);

  double temperature() const { return temperature_; }
  double beta() const { return beta_; }
  double alpha_beta() const { return alpha_beta_; }

 private:
  double temperature_;
  double beta_;
  double alpha_beta_;
};

enum class PartitionMode { exact_series, gaussian };

/// erfc_exact keeps the complementary error function in the position
/// dispersion; simplified replaces it by one.
enum class VarianceMode { erfc_exact, simplified };

/// Above this alpha * beta the Gaussian closed forms are unreliable.
inline constexpr double kThermalRegimeLimit = 0.5;

inline bool within_thermal_regime(const ThermalEnvironment& env) {
  return env.alpha_beta() <= kThermalRegimeLimit;
}

/// Moments of the ladder g * exp(-x n^2), n >= 1, evaluated with weights
/// shifted by the ground state so that large x does not underflow.
struct LadderMoments {
  double log_z = 0.0;        // ln sum g exp(-x n^2)
  double mean_n = 0.0;       // <n>
  double mean_n2 = 0.0;      // <n^2>
};

LadderMoments ladder_moments(double x, double degeneracy = 1.0,
                             double series_tol = numerics::kDefaultSeriesTol);

double partition_function(const WellGeometry& geom, const ThermalEnvironment& env,
                          PartitionMode mode,
                          double series_tol = numerics::kDefaultSeriesTol);

double log_partition_function(const WellGeometry& geom, const ThermalEnvironment& env,
                              PartitionMode mode,
                              double series_tol = numerics::kDefaultSeriesTol);

/// <E>; 1/(2 beta) in Gaussian mode.
double mean_energy(const WellGeometry& geom, const ThermalEnvironment& env, PartitionMode mode,
                   double series_tol = numerics::kDefaultSeriesTol);

/// Closed form 1/sqrt(pi alpha beta).
double mean_quantum_number(const ThermalEnvironment& env);

/// Boltzmann average of n from the exact series.
double mean_quantum_number_series(const ThermalEnvironment& env);

/// Boltzmann average of n^2 from the exact series.
double mean_square_quantum_number_series(const ThermalEnvironment& env);

/// (Delta X)^2_T. Throws RegimeError if the result is not positive.
double thermal_variance_x(const WellGeometry& geom, const ThermalEnvironment& env,
                          VarianceMode mode = VarianceMode::erfc_exact);

/// (Delta P)^2_T = pi^3 hbar^2 nbar^2 / (8 L^2) with the closed-form nbar.
double thermal_variance_p(const WellGeometry& geom, const ThermalEnvironment& env);

/// Same, with an explicit (for instance pinned) mean quantum number.
double thermal_variance_p(const WellGeometry& geom, double mean_quantum_number);

/// Boltzmann average of <n|p^2|n>; the exact counterpart of thermal_variance_p.
double thermal_momentum_square_series(const WellGeometry& geom, const ThermalEnvironment& env);

struct ThermalUncertaintyOptions {
  VarianceMode variance = VarianceMode::simplified;
  std::optional<double> pinned_mean_quantum_number;
};

/// Thermal Delta X_T, Delta P_T with their product and sum (SI values).
/// The default simplified variance reproduces the closed-form product and
/// sum relations below.
UncertaintyPair thermal_uncertainty(const WellGeometry& geom, const ThermalEnvironment& env,
                                    const ThermalUncertaintyOptions& options = {});

/// Product relation written through nbar alone:
/// (hbar nbar pi^{3/2} / 2 sqrt 2) [1/3 - 4/(nbar pi^3) (exp(-1/(pi nbar^2)) - 1/nbar)]^{1/2}.
double thermal_product_closed_form(double hbar, double mean_quantum_number);

/// Sum relation L [1/3 - (4 sqrt(ab)/pi^{5/2})(exp(-ab) - sqrt(pi ab))]^{1/2}
///   + hbar nbar pi^{3/2} / (2 sqrt 2 L).
double thermal_sum_closed_form(const WellGeometry& geom, double alpha_beta,
                               double mean_quantum_number);

}  // namespace qhe

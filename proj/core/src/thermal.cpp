#include "qhe/thermal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {
namespace {

constexpr double kPi = std::numbers::pi;

numerics::SeriesResult checked(numerics::SeriesResult r, const char* what) {
  if (!r.converged) {
    throw ConvergenceError(std::string(what) + ": series did not converge");
  }
  return r;
}

double variance_x_simplified(double L, double ab) {
  return L * L / 3.0 -
         4.0 * L * L * std::sqrt(ab) / std::pow(kPi, 2.5) * (std::exp(-ab) - std::sqrt(kPi * ab));
}

double variance_x_erfc(double L, double ab) {
  const double bracket = std::exp(-ab) - std::sqrt(kPi * ab) * numerics::erfc(std::sqrt(ab));
  const double z_gauss = 0.5 * std::sqrt(kPi / ab);
  return L * L / 3.0 - 2.0 * L * L / (kPi * kPi) * bracket / z_gauss;
}

}  // namespace

ThermalEnvironment::ThermalEnvironment(const WellGeometry& geom, double temperature)
    : temperature_(temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("ThermalEnvironment: temperature must be positive and finite");
  }
  beta_ = 1.0 / (geom.k_B() * temperature_);
  alpha_beta_ = geom.alpha() * beta_;
}

ThermalEnvironment ThermalEnvironment::with_alpha_beta(const WellGeometry& geom,
                                                       double alpha_beta) {
  if (!(alpha_beta > 0.0) || !std::isfinite(alpha_beta)) {
    throw DomainError("ThermalEnvironment: alpha*beta must be positive and finite");
  }
  return ThermalEnvironment(geom, geom.alpha() / (geom.k_B() * alpha_beta));
}

LadderMoments ladder_moments(double x, double degeneracy, double series_tol) {
  if (!(x > 0.0)) throw DomainError("ladder_moments: exponent scale must be positive");
  // Weight relative to the ground level: exp(-x (n^2 - 1)).
  auto weight = [x](long n) {
    const double k = static_cast<double>(n);
    return std::exp(-x * (k - 1.0) * (k + 1.0));
  };
  const auto s0 = checked(numerics::sum_series(weight, series_tol), "partition sum");
  const auto s1 = checked(
      numerics::sum_series([&](long n) { return static_cast<double>(n) * weight(n); }, series_tol),
      "mean quantum number");
  const auto s2 = checked(numerics::sum_series(
                              [&](long n) {
                                const double k = static_cast<double>(n);
                                return k * k * weight(n);
                              },
                              series_tol),
                          "mean square quantum number");
  LadderMoments m;
  m.log_z = std::log(degeneracy) - x + std::log(s0.value);
  m.mean_n = s1.value / s0.value;
  m.mean_n2 = s2.value / s0.value;
  return m;
}

double log_partition_function(const WellGeometry& /*geom*/, const ThermalEnvironment& env,
                              PartitionMode mode, double series_tol) {
  const double ab = env.alpha_beta();
  if (mode == PartitionMode::gaussian) return std::log(0.5 * std::sqrt(kPi / ab));
  return ladder_moments(ab, 1.0, series_tol).log_z;
}

double partition_function(const WellGeometry& geom, const ThermalEnvironment& env,
                          PartitionMode mode, double series_tol) {
  const double ab = env.alpha_beta();
  if (mode == PartitionMode::gaussian) return 0.5 * std::sqrt(kPi / ab);
  // Direct summation keeps full relative accuracy when Z is not tiny.
  if (ab < 1.0) {
    return checked(numerics::sum_series(
                       [ab](long n) {
                         const double k = static_cast<double>(n);
                         return std::exp(-ab * k * k);
                       },
                       series_tol),
                   "partition function")
        .value;
  }
  return std::exp(log_partition_function(geom, env, mode, series_tol));
}

double mean_energy(const WellGeometry& geom, const ThermalEnvironment& env, PartitionMode mode,
                   double series_tol) {
  if (mode == PartitionMode::gaussian) return 1.0 / (2.0 * env.beta());
  return geom.alpha() * ladder_moments(env.alpha_beta(), 1.0, series_tol).mean_n2;
}

double mean_quantum_number(const ThermalEnvironment& env) {
  return 1.0 / std::sqrt(kPi * env.alpha_beta());
}

double mean_quantum_number_series(const ThermalEnvironment& env) {
  return ladder_moments(env.alpha_beta()).mean_n;
}

double mean_square_quantum_number_series(const ThermalEnvironment& env) {
  return ladder_moments(env.alpha_beta()).mean_n2;
}

double thermal_variance_x(const WellGeometry& geom, const ThermalEnvironment& env,
                          VarianceMode mode) {
  const double L = geom.half_width();
  const double ab = env.alpha_beta();
  const double v =
      mode == VarianceMode::simplified ? variance_x_simplified(L, ab) : variance_x_erfc(L, ab);
  if (!(v > 0.0)) {
    throw RegimeError("thermal_variance_x: non-positive dispersion at alpha*beta = " +
                      std::to_string(ab));
  }
  return v;
}

double thermal_variance_p(const WellGeometry& geom, double n_bar) {
  const double L = geom.half_width();
  const double hbar = geom.hbar();
  return kPi * kPi * kPi * hbar * hbar * n_bar * n_bar / (8.0 * L * L);
}

double thermal_variance_p(const WellGeometry& geom, const ThermalEnvironment& env) {
  return thermal_variance_p(geom, mean_quantum_number(env));
}

double thermal_momentum_square_series(const WellGeometry& geom, const ThermalEnvironment& env) {
  const double L = geom.half_width();
  const double hbar = geom.hbar();
  return kPi * kPi * hbar * hbar / (4.0 * L * L) * mean_square_quantum_number_series(env);
}

UncertaintyPair thermal_uncertainty(const WellGeometry& geom, const ThermalEnvironment& env,
                                    const ThermalUncertaintyOptions& options) {
  const double n_bar = options.pinned_mean_quantum_number.value_or(mean_quantum_number(env));
  if (!(n_bar > 0.0)) throw DomainError("thermal_uncertainty: mean quantum number must be > 0");
  const double var_x = thermal_variance_x(geom, env, options.variance);
  const double var_p = thermal_variance_p(geom, n_bar);
  const auto mode = options.variance == VarianceMode::simplified
                        ? UncertaintyMode::thermal_simplified
                        : UncertaintyMode::thermal_exact;
  return UncertaintyPair::from(std::sqrt(var_x), std::sqrt(var_p), mode);
}

double thermal_product_closed_form(double hbar, double n_bar) {
  const double bracket =
      1.0 / 3.0 - 4.0 / (n_bar * kPi * kPi * kPi) *
                      (std::exp(-1.0 / (kPi * n_bar * n_bar)) - 1.0 / n_bar);
  return hbar * n_bar * std::pow(kPi, 1.5) / (2.0 * std::sqrt(2.0)) * std::sqrt(bracket);
}

double thermal_sum_closed_form(const WellGeometry& geom, double ab, double n_bar) {
  const double L = geom.half_width();
  const double bracket =
      1.0 / 3.0 - 4.0 * std::sqrt(ab) / std::pow(kPi, 2.5) * (std::exp(-ab) - std::sqrt(kPi * ab));
  return L * std::sqrt(bracket) +
         geom.hbar() * n_bar * std::pow(kPi, 1.5) / (2.0 * std::sqrt(2.0) * L);
}

}  // namespace qhe

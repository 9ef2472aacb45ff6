#include "qhe/bridge.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qhe/errors.hpp"
#include "qhe/numerics.hpp"

namespace qhe {
namespace {

constexpr double kPi = std::numbers::pi;
const double kPi52 = std::pow(kPi, 2.5);

// alpha in units of hbar^2/(m L^2).
constexpr double kScaledAlpha = kPi * kPi / 8.0;

void require_expansion(const ThermalEnvironment& env, const char* who) {
  if (!(env.alpha_beta() < 1.0)) {
    throw RegimeError(std::string(who) + ": alpha*beta must be < 1 for the expansion");
  }
}

}  // namespace

double c_t_constant(const WellGeometry& geom, const ThermalEnvironment& env) {
  require_expansion(env, "c_t_constant");
  const double ab = env.alpha_beta();
  const double L = geom.half_width();
  return -L / 3.0 +
         2.0 * L / (kPi52 * std::sqrt(ab)) * (ab - std::sqrt(kPi) * std::pow(ab, 1.5) - 1.0);
}

double nu_term(const ThermalEnvironment& env) {
  const double a = kScaledAlpha;
  const double ab = env.alpha_beta();
  const double b = ab / a;
  const double e = std::exp(-ab);
  const double num = std::sqrt(a) / (std::sqrt(b) * kPi52) * (e - std::sqrt(kPi * ab)) -
                     2.0 * std::sqrt(ab) / kPi52 * (a * e - 0.5 * std::sqrt(kPi * a / b));
  const double den = 1.0 / 3.0 - 4.0 * std::sqrt(ab) / kPi52 * (e - std::sqrt(kPi * ab));
  if (!(den > 0.0)) throw RegimeError("nu_term: negative position variance");
  return num / std::sqrt(den);
}

double gamma_term(const ThermalEnvironment& env) {
  const double a = kScaledAlpha;
  const double ab = env.alpha_beta();
  const double b = ab / a;
  return -1.0 / (kPi52 * std::sqrt(a) * std::pow(b, 1.5)) *
             (ab - std::sqrt(kPi) * std::pow(ab, 1.5) - 1.0) +
         2.0 / (kPi52 * std::sqrt(ab)) * (a - std::sqrt(kPi * b) * std::pow(a, 1.5));
}

BridgeConstants bridge_constants(const WellGeometry& geom, const ThermalEnvironment& env) {
  return {c_t_constant(geom.scaled(), env), nu_term(env), gamma_term(env), env.temperature()};
}

double bridge_sum(const WellGeometry& geom, const ThermalEnvironment& env,
                  SumConvention convention, VarianceMode variance) {
  require_expansion(env, "bridge_sum");
  const WellGeometry g = convention == SumConvention::scaled ? geom.scaled() : geom;
  ThermalUncertaintyOptions opts;
  opts.variance = variance;
  const auto u = thermal_uncertainty(g, env, opts);
  return u.delta_x + u.delta_p + c_t_constant(g, env);
}

double partition_from_uncertainty(const WellGeometry& geom, const ThermalEnvironment& env,
                                  SumConvention convention, VarianceMode variance) {
  const WellGeometry g = convention == SumConvention::scaled ? geom.scaled() : geom;
  return g.half_width() * std::sqrt(2.0) / (g.hbar() * std::sqrt(kPi)) *
         bridge_sum(geom, env, convention, variance);
}

double helmholtz_free_energy(const WellGeometry& geom, const ThermalEnvironment& env,
                             FreeEnergyForm form) {
  double z = 0.0;
  if (form == FreeEnergyForm::gaussian) {
    z = 0.5 * std::sqrt(kPi / env.alpha_beta());
  } else {
    z = partition_from_uncertainty(geom, env);
    if (!(z > 0.0)) {
      throw DomainError("helmholtz_free_energy: bridge argument is not positive");
    }
  }
  return -std::log(z) / env.beta();
}

double entropy(const WellGeometry& geom, const ThermalEnvironment& env) {
  const double z = partition_from_uncertainty(geom, env);
  if (!(z > 0.0)) throw DomainError("entropy: bridge argument is not positive");
  const double sum = bridge_sum(geom, env);
  const double beta_w = env.alpha_beta() / kScaledAlpha;
  const double tail =
      std::sqrt(kPi) * (nu_term(env) + gamma_term(env)) / (std::sqrt(2.0) * beta_w * sum);
  return geom.k_B() * (std::log(z) + tail);
}

double entropy_oracle(const WellGeometry& geom, const ThermalEnvironment& env, double h,
                      FreeEnergyForm form) {
  const double t = env.temperature();
  if (!(h > 0.0) || !(t - h > 0.0)) {
    throw DomainError("entropy_oracle: need h > 0 and T - h > 0");
  }
  auto f = [&](double temp) {
    return helmholtz_free_energy(geom, ThermalEnvironment(geom, temp), form);
  };
  return -numerics::central_difference(f, t, h);
}

}  // namespace qhe

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "qhe/errors.hpp"
#include "qhe/numerics.hpp"
#include "qhe/thermal.hpp"

using namespace qhe;

namespace {

const WellGeometry kUnit(1.0, 1.0, kReducedUnits);
constexpr double kPi = std::numbers::pi;

double brute_z(double ab) {
  double z = 0.0;
  for (int n = 1; n < 100000; ++n) z += std::exp(-ab * n * n);
  return z;
}

}  // namespace

TEST(Thermal, EnvironmentConstruction) {
  const WellGeometry g(1e-9);
  const ThermalEnvironment env(g, 320.0);
  EXPECT_NEAR(env.alpha_beta(), g.alpha() / (g.k_B() * 320.0), 1e-17);
  const auto back = ThermalEnvironment::with_alpha_beta(g, env.alpha_beta());
  EXPECT_NEAR(back.temperature(), 320.0, 1e-10);
  EXPECT_THROW(ThermalEnvironment(g, 0.0), DomainError);
  EXPECT_THROW(ThermalEnvironment(g, -5.0), DomainError);
  EXPECT_THROW(ThermalEnvironment::with_alpha_beta(g, 0.0), DomainError);
}

TEST(Thermal, ExactPartitionFunction) {
  for (double ab : {1.0, 0.3, 0.01, 1e-4}) {
    const auto env = ThermalEnvironment::with_alpha_beta(kUnit, ab);
    const double z = partition_function(kUnit, env, PartitionMode::exact_series);
    EXPECT_NEAR(z, brute_z(ab), 1e-13 * z) << ab;
  }
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 1.0);
  EXPECT_NEAR(partition_function(kUnit, env, PartitionMode::exact_series),
              oracle::kSumExpNegSquares, 1e-15);
}

TEST(Thermal, GaussianPartitionFunctionOffset) {
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 0.01);
  const double gauss = partition_function(kUnit, env, PartitionMode::gaussian);
  const double exact = partition_function(kUnit, env, PartitionMode::exact_series);
  EXPECT_NEAR(gauss, 0.5 * std::sqrt(kPi / 0.01), 1e-13);
  EXPECT_NEAR(gauss - exact, oracle::kGaussMinusExact001, 1e-12);
}

TEST(Thermal, LogPartitionLargeAlphaBeta) {
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 800.0);
  const double lz = log_partition_function(kUnit, env, PartitionMode::exact_series);
  EXPECT_NEAR(lz, -800.0, 1e-9);
  const auto m = ladder_moments(50.0, 2.0);
  EXPECT_NEAR(m.log_z, std::log(2.0) - 50.0, 1e-12);
  EXPECT_NEAR(m.mean_n, 1.0, 1e-15);
  EXPECT_THROW(ladder_moments(0.0), DomainError);
}

TEST(Thermal, MeanEnergy) {
  const WellGeometry g(1e-9);
  const ThermalEnvironment env(g, 320.0);
  EXPECT_NEAR(mean_energy(g, env, PartitionMode::gaussian), oracle::kMeanEnergyGauss320,
              1e-12 * oracle::kMeanEnergyGauss320);
}

TEST(Thermal, ExactMeanEnergyMatchesLogDerivative) {
  for (double L : {1e-9, 5e-9, 20e-9}) {
    const WellGeometry g(L);
    const ThermalEnvironment env(g, 80.0);
    const double beta = env.beta();
    auto log_z = [&](double b) {
      return log_partition_function(g, ThermalEnvironment(g, 1.0 / (g.k_B() * b)),
                                    PartitionMode::exact_series);
    };
    const double fd = -numerics::central_difference(log_z, beta, 1e-4 * beta);
    const double u = mean_energy(g, env, PartitionMode::exact_series);
    EXPECT_NEAR(u, fd, 1e-6 * u) << L;
  }
}

TEST(Thermal, MeanQuantumNumber) {
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 1.0 / kPi);
  EXPECT_NEAR(mean_quantum_number(env), 1.0, 1e-15);
  const auto small = ThermalEnvironment::with_alpha_beta(kUnit, 1e-4);
  EXPECT_NEAR(mean_quantum_number_series(small) / mean_quantum_number(small), 1.0, 0.02);
  const double n2 = mean_square_quantum_number_series(small);
  EXPECT_NEAR(n2, 1.0 / (2.0 * 1e-4), 0.02 / (2.0 * 1e-4));
}

TEST(Thermal, PositionVariance) {
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 0.5);
  EXPECT_NEAR(thermal_variance_x(kUnit, env, VarianceMode::erfc_exact), oracle::kVarXErfcHalf, 1e-14);
  EXPECT_NEAR(thermal_variance_x(kUnit, env, VarianceMode::simplified),
              oracle::kVarXSimplifiedHalf, 1e-14);
  const WellGeometry wide(3.0, 1.0, kReducedUnits);
  EXPECT_NEAR(thermal_variance_x(wide, env), 9.0 * oracle::kVarXErfcHalf, 1e-13);
}

TEST(Thermal, PositionVarianceApproachesUniform) {
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 1e-6);
  // Uniform on [0, 2]: variance 1/3.
  EXPECT_NEAR(thermal_variance_x(kUnit, env), 1.0 / 3.0, 1e-3);
}

TEST(Thermal, MomentumVariance) {
  EXPECT_NEAR(thermal_variance_p(kUnit, 1.0), oracle::kVarPnbar1, 1e-14);
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 0.005);
  const double closed = thermal_variance_p(kUnit, env);
  const double series = thermal_momentum_square_series(kUnit, env);
  EXPECT_NEAR(closed / series, 1.0, 0.05);
}

TEST(Thermal, ClosedFormsMatchComponents) {
  const WellGeometry g(2e-9);
  for (double t : {80.0, 200.0, 320.0}) {
    const ThermalEnvironment env(g, t);
    const auto u = thermal_uncertainty(g, env);
    const double nbar = mean_quantum_number(env);
    EXPECT_NEAR(u.product, thermal_product_closed_form(g.hbar(), nbar), 1e-12 * u.product);
    EXPECT_NEAR(u.sum_value, thermal_sum_closed_form(g, env.alpha_beta(), nbar),
                1e-12 * u.sum_value);
  }
}

TEST(Thermal, PinnedMeanQuantumNumber) {
  const WellGeometry g(2e-9);
  const ThermalEnvironment env(g, 320.0);
  ThermalUncertaintyOptions opts;
  opts.pinned_mean_quantum_number = 2.0;
  const auto pinned = thermal_uncertainty(g, env, opts);
  const auto free = thermal_uncertainty(g, env);
  EXPECT_EQ(pinned.delta_x, free.delta_x);
  EXPECT_NEAR(pinned.delta_p, std::sqrt(thermal_variance_p(g, 2.0)), 1e-12 * pinned.delta_p);
  opts.pinned_mean_quantum_number = 0.0;
  EXPECT_THROW(thermal_uncertainty(g, env, opts), DomainError);
}

TEST(Thermal, RegimeGuard) {
  EXPECT_TRUE(within_thermal_regime(ThermalEnvironment::with_alpha_beta(kUnit, 0.5)));
  EXPECT_FALSE(within_thermal_regime(ThermalEnvironment::with_alpha_beta(kUnit, 0.51)));
}

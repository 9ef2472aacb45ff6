#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "qhe/bridge.hpp"
#include "qhe/errors.hpp"

using namespace qhe;

namespace {

const WellGeometry kUnit(1.0, 1.0, kReducedUnits);
constexpr double kPi = std::numbers::pi;

double gaussian_entropy(const WellGeometry& g, const ThermalEnvironment& env) {
  return g.k_B() * (std::log(0.5 * std::sqrt(kPi / env.alpha_beta())) + 0.5);
}

}  // namespace

TEST(Bridge, OffsetValue) {
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 0.01);
  EXPECT_NEAR(c_t_constant(kUnit, env), oracle::kCt001, 1e-14);
}

TEST(Bridge, OffsetScalesWithLength) {
  const WellGeometry a(1.0, 1.0, kReducedUnits), b(2.0, 1.0, kReducedUnits);
  const auto ea = ThermalEnvironment::with_alpha_beta(a, 0.03);
  const auto eb = ThermalEnvironment::with_alpha_beta(b, 0.03);
  EXPECT_NEAR(c_t_constant(b, eb), 2.0 * c_t_constant(a, ea), 1e-14);
}

TEST(Bridge, RegimeErrors) {
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 1.0);
  EXPECT_THROW(c_t_constant(kUnit, env), RegimeError);
  EXPECT_THROW(partition_from_uncertainty(kUnit, env), RegimeError);
  EXPECT_TRUE(within_bridge_regime(ThermalEnvironment::with_alpha_beta(kUnit, 0.09)));
  EXPECT_FALSE(within_bridge_regime(ThermalEnvironment::with_alpha_beta(kUnit, 0.1)));
}

TEST(Bridge, ScaledConventionIsUnitFree) {
  const WellGeometry g(20e-9);
  const auto env = ThermalEnvironment::with_alpha_beta(g, 0.01);
  const auto env_unit = ThermalEnvironment::with_alpha_beta(kUnit, 0.01);
  EXPECT_NEAR(partition_from_uncertainty(g, env), partition_from_uncertainty(kUnit, env_unit),
              1e-12);
}

TEST(Bridge, LiteralSiArgumentIsNegative) {
  const WellGeometry g(20e-9);
  const auto env = ThermalEnvironment::with_alpha_beta(g, 0.01);
  EXPECT_LT(partition_from_uncertainty(g, env, SumConvention::literal), 0.0);
}

TEST(Bridge, ExpansionGapRegression) {
  // Measured relative gap to the Gaussian partition function.
  const auto env = ThermalEnvironment::with_alpha_beta(kUnit, 0.01);
  const double gap = partition_from_uncertainty(kUnit, env) / (0.5 * std::sqrt(kPi / 0.01)) - 1.0;
  EXPECT_NEAR(gap, -0.081585763291215, 1e-12);
}

TEST(Bridge, GaussianFreeEnergyAtUnitMean) {
  const WellGeometry g(1e-9);
  const auto env = ThermalEnvironment::with_alpha_beta(g, 1.0 / kPi);
  EXPECT_NEAR(0.5 * std::sqrt(kPi / env.alpha_beta()), kPi / 2.0, 1e-15);
  const double f = helmholtz_free_energy(g, env, FreeEnergyForm::gaussian);
  const double expected = -g.k_B() * env.temperature() * std::log(kPi / 2.0);
  EXPECT_NEAR(f, expected, 1e-12 * std::abs(expected));
}

TEST(Bridge, FreeEnergyFallsWithTemperature) {
  const WellGeometry g(20e-9);
  for (auto form : {FreeEnergyForm::gaussian, FreeEnergyForm::bridge}) {
    double prev = helmholtz_free_energy(g, ThermalEnvironment(g, 100.0), form);
    for (double t = 120.0; t <= 400.0; t += 20.0) {
      const double f = helmholtz_free_energy(g, ThermalEnvironment(g, t), form);
      EXPECT_LT(f, prev) << t;
      prev = f;
    }
  }
}

TEST(Bridge, OracleMatchesAnalyticEntropy) {
  const WellGeometry g(1e-9);
  const auto env = ThermalEnvironment::with_alpha_beta(g, 0.01);
  const double s = entropy_oracle(g, env, 1e-3);
  const double exact = gaussian_entropy(g, env);
  EXPECT_NEAR(s, exact, 1e-6 * exact);
}

TEST(Bridge, OracleStepConvergesQuadratically) {
  const WellGeometry g(1e-9);
  const auto env = ThermalEnvironment::with_alpha_beta(g, 0.01);
  const double exact = gaussian_entropy(g, env);
  const double h = 0.2 * env.temperature();
  const double e1 = std::abs(entropy_oracle(g, env, h) - exact);
  const double e2 = std::abs(entropy_oracle(g, env, h / 2) - exact);
  EXPECT_NEAR(e1 / e2, 4.0, 0.2);
}

TEST(Bridge, OracleDomain) {
  const WellGeometry g(1e-9);
  const ThermalEnvironment env(g, 10.0);
  EXPECT_THROW(entropy_oracle(g, env, 0.0), DomainError);
  EXPECT_THROW(entropy_oracle(g, env, 10.0), DomainError);
}

TEST(Bridge, EntropyAuxiliariesFinite) {
  for (double ab : {0.5, 0.1, 0.01, 0.001}) {
    const auto c = bridge_constants(kUnit, ThermalEnvironment::with_alpha_beta(kUnit, ab));
    EXPECT_TRUE(std::isfinite(c.nu));
    EXPECT_TRUE(std::isfinite(c.gamma));
    EXPECT_TRUE(std::isfinite(c.c_t));
  }
}

TEST(Bridge, EntropyNonNegativeWhereDefined) {
  for (double L = 0.5e-9; L <= 5.0e-9; L += 0.25e-9) {
    const WellGeometry g(L);
    for (double t : {80.0, 320.0}) {
      const ThermalEnvironment env(g, t);
      if (env.alpha_beta() >= 1.0) {
        EXPECT_THROW(entropy(g, env), RegimeError);
        continue;
      }
      EXPECT_GE(entropy(g, env), 0.0) << L << " " << t;
    }
  }
}

TEST(Bridge, EntropyRisesWithTemperature) {
  const WellGeometry g(30e-9);
  double prev = entropy(g, ThermalEnvironment(g, 80.0));
  for (double t = 100.0; t <= 320.0; t += 20.0) {
    const double s = entropy(g, ThermalEnvironment(g, t));
    EXPECT_GT(s, prev) << t;
    prev = s;
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "qhe/errors.hpp"
#include "qhe/numerics.hpp"
#include "qhe/stirling.hpp"

using namespace qhe;

namespace {

CycleConfig config(double L, double t1 = 320.0, double t2 = 80.0,
                   PartitionMode mode = PartitionMode::exact_series) {
  CycleConfig c;
  c.geom = WellGeometry(L);
  c.hot_T1 = t1;
  c.cold_T2 = t2;
  c.evaluation_mode = mode;
  return c;
}

double rel(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace

TEST(Stirling, ConfigValidation) {
  EXPECT_THROW(config(5e-9, 80.0, 320.0).validate(), DomainError);
  EXPECT_THROW(config(5e-9, 320.0, 0.0).validate(), DomainError);
  EXPECT_NO_THROW(config(5e-9, 100.0, 100.0).validate());
}

TEST(Stirling, PartitionFunctionsMatchOracle) {
  const auto z = stage_partition_functions(config(5e-9));
  EXPECT_LT(rel(z.a, oracle::kZa5nm), 1e-14);
  EXPECT_LT(rel(z.b, oracle::kZb5nm), 1e-14);
}

TEST(Stirling, SplitWellIsDoubledLadder) {
  for (double t : {40.0, 80.0, 320.0, 1000.0}) {
    const auto c = config(5e-9, t, t);
    const auto z = stage_partition_functions(c);
    const WellGeometry g = c.geom;
    const double x = 4.0 * g.alpha() / (g.k_B() * t);
    EXPECT_NEAR(z.b, 2.0 * std::exp(ladder_moments(x).log_z), 1e-13 * z.b);
  }
}

TEST(Stirling, GaussianStagesCancel) {
  const auto c = config(5e-9, 320.0, 80.0, PartitionMode::gaussian);
  const auto z = stage_partition_functions(c);
  EXPECT_NEAR(z.b, z.a, 1e-14 * z.a);
  EXPECT_NEAR(z.c, z.d, 1e-14 * z.d);
  const auto u = stage_internal_energies(c);
  const double kt1 = c.geom.k_B() * 320.0;
  EXPECT_DOUBLE_EQ(u.a, kt1 / 2.0);
  EXPECT_DOUBLE_EQ(u.b, kt1 / 2.0);
  EXPECT_LT(std::abs(cycle_work(c)), 1e-3 * kt1);
}

TEST(Stirling, InternalEnergyIsLogDerivative) {
  const auto c = config(5e-9);
  const auto u = stage_internal_energies(c);
  const double b1 = 1.0 / (c.geom.k_B() * c.hot_T1);
  const double a = c.geom.alpha();
  auto log_za = [&](double b) { return ladder_moments(a * b).log_z; };
  auto log_zb = [&](double b) { return ladder_moments(4.0 * a * b, 2.0).log_z; };
  EXPECT_LT(rel(-numerics::central_difference(log_za, b1, 1e-4 * b1), u.a), 1e-6);
  EXPECT_LT(rel(-numerics::central_difference(log_zb, b1, 1e-4 * b1), u.b), 1e-6);
  EXPECT_LT(u.c, u.b);
}

TEST(Stirling, HeatsMatchOracle) {
  const auto q = heat_exchanges(config(5e-9));
  EXPECT_LT(rel(q.q_ab, oracle::kQab5nm), 1e-11);
  EXPECT_LT(rel(q.q_bc, oracle::kQbc5nm), 1e-11);
  EXPECT_LT(rel(q.q_cd, oracle::kQcd5nm), 1e-11);
  EXPECT_LT(rel(q.q_da, oracle::kQda5nm), 1e-11);
}

TEST(Stirling, HeatSigns) {
  for (double L : {2e-9, 5e-9, 10e-9}) {
    const auto q = heat_exchanges(config(L));
    EXPECT_LT(q.q_bc, 0.0);
    EXPECT_GT(q.q_da, 0.0);
  }
}

TEST(Stirling, DegenerateCycle) {
  const auto c = config(5e-9, 150.0, 150.0);
  const auto q = heat_exchanges(c);
  EXPECT_EQ(q.q_bc + q.q_da, 0.0);
  EXPECT_NEAR(q.q_ab + q.q_bc + q.q_cd + q.q_da, 0.0, 1e-15 * std::abs(q.q_ab));
  EXPECT_NEAR(q.q_bc, 0.0, 1e-40);
  EXPECT_THROW(cycle_efficiency(c), DegenerateCycleError);
  EXPECT_THROW(cycle_efficiency(c, EfficiencyForm::uncertainty), DegenerateCycleError);
  const auto r = evaluate_cycle(c);
  EXPECT_TRUE(std::isnan(r.eta_direct));
}

TEST(Stirling, WorkIsSumOfHeats) {
  const auto c = config(7e-9);
  const auto q = heat_exchanges(c);
  EXPECT_EQ(cycle_work(c), q.q_ab + q.q_bc + q.q_cd + q.q_da);
  const auto r = evaluate_cycle(c);
  EXPECT_EQ(r.work, r.q_ab + r.q_bc + r.q_cd + r.q_da);
  const double kt1 = c.geom.k_B() * c.hot_T1, kt2 = c.geom.k_B() * c.cold_T2;
  EXPECT_NEAR(r.work, kt1 * r.log_zb_over_za + kt2 * r.log_zd_over_zc, 1e-12 * kt1);
}

TEST(Stirling, UncertaintyWorkForms) {
  const auto c = config(20e-9);
  const auto r = evaluate_cycle(c);
  ASSERT_TRUE(r.d_coeff && r.e_coeff);
  EXPECT_NEAR(*r.work_uncertainty_literal, cycle_work(c, WorkForm::uncertainty_literal),
              1e-12 * std::abs(*r.work_uncertainty_literal));
  EXPECT_NEAR(*r.work_uncertainty_normalized, cycle_work(c, WorkForm::uncertainty_normalized),
              1e-12 * std::abs(*r.work_uncertainty_normalized));
  // 8 L^2 alpha / (hbar^2 pi^2) reduces to 1/m.
  EXPECT_NEAR(*r.work_uncertainty_literal * c.geom.mass() * std::numbers::pi,
              *r.work_uncertainty_normalized / c.geom.alpha(), 1e-9 * std::abs(*r.work_uncertainty_normalized / c.geom.alpha()));
  EXPECT_NEAR(*r.eta_uncertainty, cycle_efficiency(c, EfficiencyForm::uncertainty), 1e-14);
  EXPECT_NEAR(*r.eta_uncertainty, efficiency_from_ratio(r.log_zb_over_za, r.log_zd_over_zc,
                                                        *r.e_coeff / *r.d_coeff), 1e-12);
}

TEST(Stirling, OutsideExpansionLeavesUncertaintyFormsEmpty) {
  const auto r = evaluate_cycle(config(2e-9));
  EXPECT_FALSE(r.d_coeff.has_value());
  EXPECT_FALSE(r.eta_uncertainty.has_value());
  EXPECT_FALSE(r.bridge_regime);
}

TEST(Stirling, CarnotLimit) {
  EXPECT_DOUBLE_EQ(carnot_limit(320.0, 80.0), 0.75);
  EXPECT_DOUBLE_EQ(carnot_limit(300.0, 75.0), 0.75);
  EXPECT_NEAR(carnot_limit(300.0, 300.0 - 1e-6), 1e-6 / 300.0, 1e-15);
  EXPECT_THROW(carnot_limit(80.0, 320.0), DomainError);
  EXPECT_THROW(carnot_limit(80.0, 80.0), DomainError);
  EXPECT_THROW(carnot_limit(80.0, 0.0), DomainError);
}

TEST(Stirling, DirectEfficiencyBelowCarnot) {
  for (double L = 2e-9; L <= 10e-9 + 1e-12; L += 0.5e-9) {
    const auto r = evaluate_cycle(config(L));
    EXPECT_LE(r.eta_direct, 0.75 + 1e-9) << L;
    EXPECT_FALSE(r.carnot_violation);
  }
}

TEST(Stirling, EfficiencyScaleInvariance) {
  const double lambda = 2.5;
  const auto a = config(5e-9, 320.0, 80.0);
  const auto b = config(5e-9 / std::sqrt(lambda), 320.0 * lambda, 80.0 * lambda);
  EXPECT_NEAR(cycle_efficiency(a), cycle_efficiency(b), 1e-12);
}

TEST(Stirling, EfficiencyBoundsCurve) {
  std::vector<double> lengths;
  for (double l = 60.0; l >= 12.0; l -= 4.0) lengths.push_back(l * 1e-9);
  const auto rows = efficiency_bounds_curve(config(12e-9), lengths);
  ASSERT_EQ(rows.size(), lengths.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_TRUE(rows[i].regime_ok);
    EXPECT_LE(rows[i].eta_lower, rows[i].eta_upper);
    EXPECT_LE(rows[i].eta_upper, 0.75 + 1e-9);
    if (i) EXPECT_GE(rows[i].sum_uncertainty, rows[i - 1].sum_uncertainty);
  }
  EXPECT_THROW(efficiency_bounds_curve(config(12e-9), {}), DomainError);
}

TEST(Stirling, EfficiencyBoundsOutsideExpansion) {
  const auto rows = efficiency_bounds_curve(config(1e-9), {1e-9});
  EXPECT_FALSE(rows[0].regime_ok);
  EXPECT_TRUE(std::isnan(rows[0].eta_lower));
}

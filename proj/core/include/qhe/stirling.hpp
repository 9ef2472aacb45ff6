#pragma once

#include <optional>
#include <vector>

#include "qhe/numerics.hpp"
#include "qhe/thermal.hpp"
#include "qhe/well.hpp"

namespace qhe {

/// Stirling cycle between a hot bath T1 and a cold bath T2. T1 == T2 is
/// accepted as a degenerate cycle (its efficiency is undefined).
struct CycleConfig {
  WellGeometry geom{1e-9};
  double hot_T1 = 320.0;
  double cold_T2 = 80.0;
  double series_tol = numerics::kDefaultSeriesTol;
  PartitionMode evaluation_mode = PartitionMode::exact_series;

  void validate() const;
};

/// Per-stage values: A (full well, T1), B (split well, T1), C (split well,
/// T2), D (full well, T2).
struct StageValues {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct HeatExchanges {
  double q_ab = 0.0;
  double q_bc = 0.0;
  double q_cd = 0.0;
  double q_da = 0.0;
};

enum class WorkForm { direct, uncertainty_literal, uncertainty_normalized };
enum class EfficiencyForm { direct, uncertainty };

struct CycleResult {
  double z_a = 0, z_b = 0, z_c = 0, z_d = 0;
  double log_zb_over_za = 0;
  double log_zd_over_zc = 0;
  double u_a = 0, u_b = 0, u_c = 0, u_d = 0;
  double q_ab = 0, q_bc = 0, q_cd = 0, q_da = 0;
  double work = 0;
  double eta_direct = 0;
  double carnot = 0;
  double alpha_beta_hot = 0;
  double alpha_beta_cold = 0;
  // Quantities built from the uncertainty bridge; empty when either bath
  // is outside the expansion (alpha beta >= 1).
  std::optional<double> d_coeff;
  std::optional<double> e_coeff;
  std::optional<double> eta_uncertainty;
  std::optional<double> work_uncertainty_literal;     // kg^-1, as printed
  std::optional<double> work_uncertainty_normalized;  // joules
  bool engine_regime = false;     // work > 0
  bool carnot_violation = false;  // work > 0 and eta_direct > carnot + 1e-9
  bool bridge_regime = false;     // both baths below kBridgeRegimeLimit
};

StageValues stage_partition_functions(const CycleConfig& cfg);
/// ln Z per stage; stays finite when Z itself would overflow.
StageValues stage_log_partition_functions(const CycleConfig& cfg);
StageValues stage_internal_energies(const CycleConfig& cfg);
HeatExchanges heat_exchanges(const CycleConfig& cfg);

/// Bridge coefficient (8 L^2 / (pi^3 hbar^2)) (Delta X_T + Delta P_T + C_T)^2,
/// in well units. Approximately nbar(T)^2.
double bridge_coefficient(const WellGeometry& geom, const ThermalEnvironment& env);

double cycle_work(const CycleConfig& cfg, WorkForm form = WorkForm::direct);

/// Throws DegenerateCycleError for T1 == T2 or a vanishing denominator.
double cycle_efficiency(const CycleConfig& cfg, EfficiencyForm form = EfficiencyForm::direct);

/// 1 - T2/T1, requires T1 > T2 > 0.
double carnot_limit(double t1, double t2);

/// Uncertainty-form efficiency as a function of r = E/D.
/// Uncertainty-form efficiency written through r = E/D.
double efficiency_from_ratio(double log_zb_over_za, double log_zd_over_zc, double r);

CycleResult evaluate_cycle(const CycleConfig& cfg);

struct EfficiencyBoundsRow {
  double length = 0.0;           // metres
  double sum_uncertainty = 0.0;  // hot-bath Delta X + Delta P, well units
  double eta_lower = 0.0;
  double eta_upper = 0.0;
  bool regime_ok = true;
};

/// For each length, the uncertainty-form efficiency with Delta X + Delta P
/// rescaled to the thermal lower and upper variance-sum bounds, i.e.
/// (Delta X + Delta P) sqrt(V_bound / V), in both baths. eta_lower and
/// eta_upper are the smaller and larger of the two. Rows outside the
/// expansion carry regime_ok = false. Rows are sorted by sum_uncertainty.
std::vector<EfficiencyBoundsRow> efficiency_bounds_curve(const CycleConfig& cfg,
                                                         const std::vector<double>& lengths);

}  // namespace qhe

#include "qhe/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qhe/bounds.hpp"
#include "qhe/bridge.hpp"
#include "qhe/errors.hpp"

namespace qhe {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Stage {
  double log_z;
  double u;
};

// One stage: spectrum scale * alpha * n^2 with the given degeneracy.
Stage stage(const CycleConfig& cfg, double beta, double scale, double degeneracy) {
  const double a = scale * cfg.geom.alpha();
  const double x = a * beta;
  if (cfg.evaluation_mode == PartitionMode::gaussian) {
    return {std::log(degeneracy * 0.5 * std::sqrt(kPi / x)), 0.5 / beta};
  }
  const auto m = ladder_moments(x, degeneracy, cfg.series_tol);
  return {m.log_z, a * m.mean_n2};
}

struct Stages {
  Stage a, b, c, d;
};

Stages all_stages(const CycleConfig& cfg) {
  cfg.validate();
  const double b1 = 1.0 / (cfg.geom.k_B() * cfg.hot_T1);
  const double b2 = 1.0 / (cfg.geom.k_B() * cfg.cold_T2);
  return {stage(cfg, b1, 1.0, 1.0), stage(cfg, b1, 4.0, 2.0), stage(cfg, b2, 4.0, 2.0),
          stage(cfg, b2, 1.0, 1.0)};
}

HeatExchanges heats_from(const CycleConfig& cfg, const Stages& s) {
  const double kt1 = cfg.geom.k_B() * cfg.hot_T1;
  const double kt2 = cfg.geom.k_B() * cfg.cold_T2;
  HeatExchanges q;
  q.q_ab = s.b.u - s.a.u + kt1 * (s.b.log_z - s.a.log_z);
  q.q_bc = s.c.u - s.b.u;
  q.q_cd = s.d.u - s.c.u + kt2 * (s.d.log_z - s.c.log_z);
  q.q_da = s.a.u - s.d.u;
  return q;
}

double direct_efficiency(const HeatExchanges& q) {
  const double den = q.q_da + q.q_ab;
  if (den == 0.0) throw DegenerateCycleError("cycle_efficiency: no heat absorbed");
  return 1.0 + (q.q_bc + q.q_cd) / den;
}

double uncertainty_efficiency(double d, double e, double l1, double l2) {
  const double den = -e / 2.0 + d * (l1 + 0.5);
  if (den == 0.0) throw DegenerateCycleError("cycle_efficiency: vanishing denominator");
  return (d * l1 + e * l2) / den;
}

ThermalEnvironment hot_env(const CycleConfig& cfg) {
  return ThermalEnvironment(cfg.geom, cfg.hot_T1);
}
ThermalEnvironment cold_env(const CycleConfig& cfg) {
  return ThermalEnvironment(cfg.geom, cfg.cold_T2);
}

void require_distinct(const CycleConfig& cfg) {
  if (cfg.hot_T1 == cfg.cold_T2) {
    throw DegenerateCycleError("cycle_efficiency: T1 == T2, the cycle does no work");
  }
}

}  // namespace

void CycleConfig::validate() const {
  if (!(cold_T2 > 0.0) || !std::isfinite(hot_T1) || !std::isfinite(cold_T2)) {
    throw DomainError("CycleConfig: temperatures must be positive and finite");
  }
  if (hot_T1 < cold_T2) throw DomainError("CycleConfig: requires hot_T1 >= cold_T2");
  if (!(series_tol > 0.0)) throw DomainError("CycleConfig: series_tol must be > 0");
}

StageValues stage_log_partition_functions(const CycleConfig& cfg) {
  const auto s = all_stages(cfg);
  return {s.a.log_z, s.b.log_z, s.c.log_z, s.d.log_z};
}

StageValues stage_partition_functions(const CycleConfig& cfg) {
  const auto l = stage_log_partition_functions(cfg);
  return {std::exp(l.a), std::exp(l.b), std::exp(l.c), std::exp(l.d)};
}

StageValues stage_internal_energies(const CycleConfig& cfg) {
  const auto s = all_stages(cfg);
  return {s.a.u, s.b.u, s.c.u, s.d.u};
}

HeatExchanges heat_exchanges(const CycleConfig& cfg) { return heats_from(cfg, all_stages(cfg)); }

double bridge_coefficient(const WellGeometry& geom, const ThermalEnvironment& env) {
  const double s = bridge_sum(geom, env, SumConvention::scaled);
  return 8.0 / (kPi * kPi * kPi) * s * s;
}

double cycle_work(const CycleConfig& cfg, WorkForm form) {
  const auto s = all_stages(cfg);
  if (form == WorkForm::direct) {
    const auto q = heats_from(cfg, s);
    return q.q_ab + q.q_bc + q.q_cd + q.q_da;
  }
  const double d = bridge_coefficient(cfg.geom, hot_env(cfg));
  const double e = bridge_coefficient(cfg.geom, cold_env(cfg));
  const double bracket = d * (s.b.log_z - s.a.log_z) + e * (s.d.log_z - s.c.log_z);
  const auto& g = cfg.geom;
  if (form == WorkForm::uncertainty_literal) {
    const double L = g.half_width();
    return 8.0 * L * L * g.alpha() / (g.hbar() * g.hbar() * kPi * kPi) * bracket;
  }
  return kPi * g.alpha() * bracket;
}

double cycle_efficiency(const CycleConfig& cfg, EfficiencyForm form) {
  cfg.validate();
  require_distinct(cfg);
  const auto s = all_stages(cfg);
  if (form == EfficiencyForm::direct) return direct_efficiency(heats_from(cfg, s));
  return uncertainty_efficiency(bridge_coefficient(cfg.geom, hot_env(cfg)),
                                bridge_coefficient(cfg.geom, cold_env(cfg)),
                                s.b.log_z - s.a.log_z, s.d.log_z - s.c.log_z);
}

double carnot_limit(double t1, double t2) {
  if (!(t2 > 0.0) || !(t1 > t2)) throw DomainError("carnot_limit: requires T1 > T2 > 0");
  return 1.0 - t2 / t1;
}

double efficiency_from_ratio(double l1, double l2, double r) {
  return (l1 + r * l2) / (-r / 2.0 + l1 + 0.5);
}

CycleResult evaluate_cycle(const CycleConfig& cfg) {
  const auto s = all_stages(cfg);
  const auto q = heats_from(cfg, s);
  const auto env1 = hot_env(cfg);
  const auto env2 = cold_env(cfg);

  CycleResult r;
  r.z_a = std::exp(s.a.log_z);
  r.z_b = std::exp(s.b.log_z);
  r.z_c = std::exp(s.c.log_z);
  r.z_d = std::exp(s.d.log_z);
  r.log_zb_over_za = s.b.log_z - s.a.log_z;
  r.log_zd_over_zc = s.d.log_z - s.c.log_z;
  r.u_a = s.a.u;
  r.u_b = s.b.u;
  r.u_c = s.c.u;
  r.u_d = s.d.u;
  r.q_ab = q.q_ab;
  r.q_bc = q.q_bc;
  r.q_cd = q.q_cd;
  r.q_da = q.q_da;
  r.work = q.q_ab + q.q_bc + q.q_cd + q.q_da;
  r.alpha_beta_hot = env1.alpha_beta();
  r.alpha_beta_cold = env2.alpha_beta();

  const bool distinct = cfg.hot_T1 > cfg.cold_T2;
  r.carnot = distinct ? carnot_limit(cfg.hot_T1, cfg.cold_T2) : 0.0;
  r.eta_direct = (distinct && q.q_da + q.q_ab != 0.0) ? direct_efficiency(q) : kNaN;
  r.engine_regime = r.work > 0.0;
  r.carnot_violation = r.engine_regime && r.eta_direct > r.carnot + 1e-9;
  r.bridge_regime = within_bridge_regime(env1) && within_bridge_regime(env2);

  try {
    const double d = bridge_coefficient(cfg.geom, env1);
    const double e = bridge_coefficient(cfg.geom, env2);
    r.d_coeff = d;
    r.e_coeff = e;
    const double bracket = d * r.log_zb_over_za + e * r.log_zd_over_zc;
    const auto& g = cfg.geom;
    const double L = g.half_width();
    r.work_uncertainty_literal = 8.0 * L * L * g.alpha() / (g.hbar() * g.hbar() * kPi * kPi) * bracket;
    r.work_uncertainty_normalized = kPi * g.alpha() * bracket;
    const double den = -e / 2.0 + d * (r.log_zb_over_za + 0.5);
    if (distinct && den != 0.0) r.eta_uncertainty = bracket / den;
  } catch (const RegimeError&) {
    // Outside the expansion: the uncertainty-form quantities stay empty.
  }
  return r;
}

namespace {

struct BathBounds {
  double d_lower;  // coefficient with the lower-bound sum
  double d_upper;  // coefficient with the upper-bound sum
  bool positive;   // both bridge sums positive
};

// Replaces Delta X + Delta P by (Delta X + Delta P) sqrt(V_bound / V) for the
// thermal lower and upper bounds on V = Delta X^2 + Delta P^2.
BathBounds bath_bounds(const WellGeometry& geom, const ThermalEnvironment& env) {
  const WellGeometry g = geom.scaled();
  ThermalBoundsOptions opts;
  opts.convention = SumConvention::scaled;
  opts.central_variance = VarianceMode::simplified;
  const auto bounds = thermal_sum_variance_bounds(geom, env, minimum_thermal_dimension(env), opts);
  const double sum = thermal_uncertainty(g, env).sum_value;
  const double c_t = c_t_constant(g, env);
  const double lo = sum * std::sqrt(bounds.lower / *bounds.central) + c_t;
  const double hi = sum * std::sqrt(bounds.upper / *bounds.central) + c_t;
  const double k = 8.0 / (kPi * kPi * kPi);
  return {k * lo * lo, k * hi * hi, lo > 0.0 && hi > 0.0};
}

}  // namespace

std::vector<EfficiencyBoundsRow> efficiency_bounds_curve(const CycleConfig& cfg,
                                                         const std::vector<double>& lengths) {
  if (lengths.empty()) throw DomainError("efficiency_bounds_curve: empty length sweep");
  cfg.validate();
  require_distinct(cfg);

  std::vector<EfficiencyBoundsRow> rows;
  rows.reserve(lengths.size());
  for (const double length : lengths) {
    CycleConfig c = cfg;
    c.geom = WellGeometry(length, cfg.geom.mass(), cfg.geom.constants());
    const ThermalEnvironment env1(c.geom, c.hot_T1);
    const ThermalEnvironment env2(c.geom, c.cold_T2);

    EfficiencyBoundsRow row;
    row.length = length;
    row.sum_uncertainty = thermal_uncertainty(c.geom.scaled(), env1).sum_value;
    row.eta_lower = kNaN;
    row.eta_upper = kNaN;
    row.regime_ok = false;
    if (env1.alpha_beta() < 1.0 && env2.alpha_beta() < 1.0) {
      const auto logs = stage_log_partition_functions(c);
      const double l1 = logs.b - logs.a;
      const double l2 = logs.d - logs.c;
      const auto hot = bath_bounds(c.geom, env1);
      const auto cold = bath_bounds(c.geom, env2);
      const double a = uncertainty_efficiency(hot.d_lower, cold.d_lower, l1, l2);
      const double b = uncertainty_efficiency(hot.d_upper, cold.d_upper, l1, l2);
      row.eta_lower = std::min(a, b);
      row.eta_upper = std::max(a, b);
      row.regime_ok = hot.positive && cold.positive && std::isfinite(a) && std::isfinite(b);
    }
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return x.sum_uncertainty < y.sum_uncertainty;
  });
  return rows;
}

}  // namespace qhe

#include "qhe/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "qhe/bounds.hpp"
#include "qhe/bridge.hpp"
#include "qhe/errors.hpp"
#include "qhe/stirling.hpp"
#include "qhe/thermal.hpp"
#include "qhe/well.hpp"

namespace qhe::sweep {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNanometre = 1e-9;

// Library errors become NaN; the row's regime flag records it.
double guarded(const std::function<double()>& f) {
  try {
    return f();
  } catch (const qhe::Error&) {
    return kNaN;
  }
}

std::string temperature_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "T%g", t);
  return buf;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

class TableBuilder {
 public:
  void column(std::string name, bool flag = false) {
    table_.columns.push_back(std::move(name));
    table_.is_flag.push_back(flag);
  }
  void row(std::vector<double> values) { table_.rows.push_back(std::move(values)); }
  SweepTable finish(bool sort_by_first) {
    if (sort_by_first) {
      std::stable_sort(table_.rows.begin(), table_.rows.end(),
                       [](const auto& a, const auto& b) { return a[0] < b[0]; });
    }
    return std::move(table_);
  }

 private:
  SweepTable table_;
};

WellGeometry geometry(const SweepSpec& spec, double l_nm) {
  return WellGeometry(l_nm * kNanometre, spec.mass);
}

double sum_uncertainty(const WellGeometry& g, const ThermalEnvironment& env, SumConvention units,
                       std::optional<double> pinned = std::nullopt) {
  ThermalUncertaintyOptions opts;
  opts.pinned_mean_quantum_number = pinned;
  return thermal_uncertainty(g, env, opts).in_convention(g, units).sum_value;
}

SweepTable run_fig1(const SweepSpec& spec) {
  TableBuilder b;
  b.column("L_nm");
  for (double t : spec.temperatures) b.column("sum_unc_" + temperature_label(t));
  b.column("regime_ok", true);
  for (double l : length_grid_nm(spec.l_range)) {
    const auto g = geometry(spec, l);
    std::vector<double> values{l};
    bool ok = true;
    for (double t : spec.temperatures) {
      const ThermalEnvironment env(g, t);
      values.push_back(guarded([&] { return sum_uncertainty(g, env, spec.units); }));
      ok = ok && within_thermal_regime(env);
    }
    values.push_back(ok && all_finite(values) ? 1.0 : 0.0);
    b.row(std::move(values));
  }
  return b.finish(true);
}

SweepTable run_fig2(const SweepSpec& spec) {
  TableBuilder b;
  b.column("L_nm");
  for (int n : spec.pinned_n) b.column("sum_unc_n" + std::to_string(n));
  b.column("regime_ok", true);
  for (double l : length_grid_nm(spec.l_range)) {
    const auto g = geometry(spec, l);
    const ThermalEnvironment env(g, spec.temperatures.front());
    std::vector<double> values{l};
    for (int n : spec.pinned_n) {
      values.push_back(guarded([&] { return sum_uncertainty(g, env, spec.units, n); }));
    }
    values.push_back(within_thermal_regime(env) && all_finite(values) ? 1.0 : 0.0);
    b.row(std::move(values));
  }
  return b.finish(true);
}

SweepTable run_fig3(const SweepSpec& spec) {
  TableBuilder b;
  b.column("L_nm");
  for (int n : spec.pinned_n) {
    b.column("lower_n" + std::to_string(n));
    b.column("upper_n" + std::to_string(n));
  }
  b.column("regime_ok", true);
  for (double l : length_grid_nm(spec.l_range)) {
    const auto g = geometry(spec, l);
    const ThermalEnvironment env(g, spec.temperatures.front());
    std::vector<double> values{l};
    for (int n : spec.pinned_n) {
      ThermalBoundsOptions opts;
      opts.convention = spec.units;
      opts.pinned_mean_quantum_number = n;
      BoundsReport r;
      bool have = true;
      try {
        r = thermal_sum_variance_bounds(g, env, minimum_thermal_dimension(env), opts);
      } catch (const qhe::Error&) {
        have = false;
      }
      values.push_back(have ? r.lower : kNaN);
      values.push_back(have ? r.upper : kNaN);
    }
    values.push_back(within_thermal_regime(env) && all_finite(values) ? 1.0 : 0.0);
    b.row(std::move(values));
  }
  return b.finish(true);
}

SweepTable run_fig5(const SweepSpec& spec) {
  TableBuilder b;
  b.column("sum_unc");
  for (double t : spec.temperatures) b.column("entropy_" + temperature_label(t));
  b.column("L_nm");
  b.column("regime_ok", true);
  for (double l : length_grid_nm(spec.l_range)) {
    const auto g = geometry(spec, l);
    const ThermalEnvironment hot(g, spec.temperatures.front());
    std::vector<double> values{
        guarded([&] { return sum_uncertainty(g, hot, SumConvention::scaled); })};
    bool ok = true;
    for (double t : spec.temperatures) {
      const ThermalEnvironment env(g, t);
      values.push_back(guarded([&] { return entropy(g, env); }));
      ok = ok && within_bridge_regime(env);
    }
    values.push_back(l);
    values.push_back(ok && all_finite(values) ? 1.0 : 0.0);
    b.row(std::move(values));
  }
  return b.finish(true);
}

CycleConfig cycle_config(const SweepSpec& spec, double l_nm) {
  CycleConfig cfg;
  cfg.geom = geometry(spec, l_nm);
  cfg.hot_T1 = spec.temperatures.at(0);
  cfg.cold_T2 = spec.temperatures.at(1);
  return cfg;
}

SweepTable run_fig8(const SweepSpec& spec) {
  const auto grid = length_grid_nm(spec.l_range);
  std::vector<double> lengths;
  for (double l : grid) lengths.push_back(l * kNanometre);
  const auto rows = efficiency_bounds_curve(cycle_config(spec, grid.front()), lengths);
  TableBuilder b;
  b.column("sum_unc");
  b.column("eta_lower");
  b.column("eta_upper");
  b.column("L_nm");
  b.column("regime_ok", true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    b.row({r.sum_uncertainty, r.eta_lower, r.eta_upper, grid[i], r.regime_ok ? 1.0 : 0.0});
  }
  return b.finish(true);
}

using PerTemperature =
    std::function<double(const SweepSpec&, const WellGeometry&, const ThermalEnvironment&)>;
using PerCycle = std::function<double(const CycleConfig&)>;

struct Quantity {
  std::string name;
  PerTemperature per_temperature;
  PerCycle per_cycle;
};

const std::vector<Quantity>& quantity_table() {
  static const std::vector<Quantity> table = [] {
    auto unc = [](auto field) {
      return [field](const SweepSpec& s, const WellGeometry& g, const ThermalEnvironment& e) {
        return field(thermal_uncertainty(g, e).in_convention(g, s.units));
      };
    };
    auto bound = [](bool upper) {
      return [upper](const SweepSpec& s, const WellGeometry& g, const ThermalEnvironment& e) {
        ThermalBoundsOptions opts;
        opts.convention = s.units;
        const auto r = thermal_sum_variance_bounds(g, e, minimum_thermal_dimension(e), opts);
        return upper ? r.upper : r.lower;
      };
    };
    std::vector<Quantity> q;
    q.push_back({"delta_x", unc([](const UncertaintyPair& u) { return u.delta_x; }), {}});
    q.push_back({"delta_p", unc([](const UncertaintyPair& u) { return u.delta_p; }), {}});
    q.push_back({"product_unc", unc([](const UncertaintyPair& u) { return u.product; }), {}});
    q.push_back({"sum_unc", unc([](const UncertaintyPair& u) { return u.sum_value; }), {}});
    q.push_back({"alpha_beta",
                 [](const SweepSpec&, const WellGeometry&, const ThermalEnvironment& e) {
                   return e.alpha_beta();
                 },
                 {}});
    q.push_back({"mean_n",
                 [](const SweepSpec&, const WellGeometry&, const ThermalEnvironment& e) {
                   return mean_quantum_number(e);
                 },
                 {}});
    q.push_back({"partition_exact",
                 [](const SweepSpec&, const WellGeometry& g, const ThermalEnvironment& e) {
                   return partition_function(g, e, PartitionMode::exact_series);
                 },
                 {}});
    q.push_back({"partition_gaussian",
                 [](const SweepSpec&, const WellGeometry& g, const ThermalEnvironment& e) {
                   return partition_function(g, e, PartitionMode::gaussian);
                 },
                 {}});
    q.push_back({"partition_bridge",
                 [](const SweepSpec&, const WellGeometry& g, const ThermalEnvironment& e) {
                   return partition_from_uncertainty(g, e);
                 },
                 {}});
    q.push_back({"c_t",
                 [](const SweepSpec&, const WellGeometry& g, const ThermalEnvironment& e) {
                   return c_t_constant(g.scaled(), e);
                 },
                 {}});
    q.push_back({"free_energy",
                 [](const SweepSpec&, const WellGeometry& g, const ThermalEnvironment& e) {
                   return helmholtz_free_energy(g, e, FreeEnergyForm::gaussian);
                 },
                 {}});
    q.push_back({"entropy",
                 [](const SweepSpec&, const WellGeometry& g, const ThermalEnvironment& e) {
                   return entropy(g, e);
                 },
                 {}});
    q.push_back({"entropy_oracle",
                 [](const SweepSpec&, const WellGeometry& g, const ThermalEnvironment& e) {
                   return entropy_oracle(g, e, 0.01);
                 },
                 {}});
    q.push_back({"lower_bound", bound(false), {}});
    q.push_back({"upper_bound", bound(true), {}});
    q.push_back({"work", {}, [](const CycleConfig& c) { return cycle_work(c); }});
    q.push_back({"eta_direct", {}, [](const CycleConfig& c) { return cycle_efficiency(c); }});
    q.push_back({"eta_uncertainty", {}, [](const CycleConfig& c) {
                   return cycle_efficiency(c, EfficiencyForm::uncertainty);
                 }});
    q.push_back({"carnot", {}, [](const CycleConfig& c) {
                   return carnot_limit(c.hot_T1, c.cold_T2);
                 }});
    return q;
  }();
  return table;
}

const Quantity& find_quantity(const std::string& name) {
  for (const auto& q : quantity_table()) {
    if (q.name == name) return q;
  }
  throw UsageError("unknown quantity '" + name + "'");
}

SweepTable run_custom(const SweepSpec& spec) {
  TableBuilder b;
  b.column("L_nm");
  for (const auto& name : spec.quantities) {
    const auto& q = find_quantity(name);
    if (q.per_temperature) {
      for (double t : spec.temperatures) b.column(name + "_" + temperature_label(t));
    } else {
      b.column(name);
    }
  }
  b.column("regime_ok", true);
  for (double l : length_grid_nm(spec.l_range)) {
    const auto g = geometry(spec, l);
    std::vector<double> values{l};
    bool ok = true;
    for (const auto& name : spec.quantities) {
      const auto& q = find_quantity(name);
      if (q.per_temperature) {
        for (double t : spec.temperatures) {
          const ThermalEnvironment env(g, t);
          ok = ok && within_thermal_regime(env);
          values.push_back(guarded([&] { return q.per_temperature(spec, g, env); }));
        }
      } else {
        values.push_back(guarded([&] { return q.per_cycle(cycle_config(spec, l)); }));
      }
    }
    values.push_back(ok && all_finite(values) ? 1.0 : 0.0);
    b.row(std::move(values));
  }
  return b.finish(true);
}

}  // namespace

std::string preset_name(Preset preset) {
  switch (preset) {
    case Preset::fig1: return "fig1";
    case Preset::fig2: return "fig2";
    case Preset::fig3: return "fig3";
    case Preset::fig5: return "fig5";
    case Preset::fig8: return "fig8";
    case Preset::custom: return "custom";
  }
  return "custom";
}

LengthRange default_range(Preset preset) {
  if (preset == Preset::fig5 || preset == Preset::fig8) return {12.0, 60.0, 50};
  return {};
}

std::vector<double> length_grid_nm(const LengthRange& range) {
  std::vector<double> grid(static_cast<std::size_t>(range.steps));
  const double step = (range.max_nm - range.min_nm) / (range.steps - 1);
  for (int i = 0; i < range.steps; ++i) grid[i] = range.min_nm + i * step;
  grid.back() = range.max_nm;
  return grid;
}

const std::vector<std::string>& custom_quantities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& q : quantity_table()) n.push_back(q.name);
    return n;
  }();
  return names;
}

void SweepSpec::validate() const {
  if (!(l_range.min_nm > 0.0) || !std::isfinite(l_range.min_nm)) {
    throw UsageError("l-min must be a positive length in nm");
  }
  if (!(l_range.min_nm < l_range.max_nm) || !std::isfinite(l_range.max_nm)) {
    throw UsageError("l-min must be smaller than l-max");
  }
  if (l_range.steps < 2) throw UsageError("steps must be at least 2");
  if (temperatures.empty()) throw UsageError("at least one temperature is required");
  for (double t : temperatures) {
    if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("temperatures must be positive");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) throw UsageError("mass must be positive (kg)");
  const bool needs_pair = preset == Preset::fig8 ||
                          (preset == Preset::custom &&
                           std::any_of(quantities.begin(), quantities.end(), [](const auto& q) {
                             return !find_quantity(q).per_temperature;
                           }));
  if (needs_pair && (temperatures.size() < 2 || !(temperatures[0] > temperatures[1]))) {
    throw UsageError("cycle quantities need hot > cold");
  }
  if ((preset == Preset::fig2 || preset == Preset::fig3) && pinned_n.empty()) {
    throw UsageError("pinned-n must list at least one quantum number");
  }
  for (int n : pinned_n) {
    if (n < 1) throw UsageError("pinned-n values must be >= 1");
  }
  if (preset == Preset::custom) {
    if (quantities.empty()) {
      throw UsageError("custom preset needs --quantities (one or more of the known names)");
    }
    for (const auto& q : quantities) find_quantity(q);
  }
}

std::size_t SweepTable::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

double SweepTable::at(std::size_t row, const std::string& name) const {
  return rows.at(row).at(column_index(name));
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  switch (spec.preset) {
    case Preset::fig1: return run_fig1(spec);
    case Preset::fig2: return run_fig2(spec);
    case Preset::fig3: return run_fig3(spec);
    case Preset::fig5: return run_fig5(spec);
    case Preset::fig8: return run_fig8(spec);
    case Preset::custom: return run_custom(spec);
  }
  throw UsageError("unknown preset");
}

std::string format_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += table.is_flag[c] ? (row[c] != 0.0 ? "true" : "false") : format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string format_json(const SweepTable& table) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (table.is_flag[c]) {
        obj[table.columns[c]] = row[c] != 0.0;
      } else if (std::isfinite(row[c])) {
        obj[table.columns[c]] = row[c];
      } else {
        obj[table.columns[c]] = nullptr;
      }
    }
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

void write_output(const SweepTable& table, const SweepSpec& spec) {
  if (table.rows.empty()) throw std::invalid_argument("write_output: no rows");
  const std::string text =
      spec.output_format == OutputFormat::json ? format_json(table) : format_csv(table);
  if (spec.output_path == "-") {
    std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
    std::cout.flush();
    return;
  }
  std::ofstream file(spec.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + spec.output_path + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw IoError("failed writing '" + spec.output_path + "'");
}

}  // namespace qhe::sweep

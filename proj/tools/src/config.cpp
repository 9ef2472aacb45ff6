#include <CLI11.hpp>
#include <json.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "qhe/stirling.hpp"
#include "qhe/sweep.hpp"

namespace qhe::sweep {
namespace {

const std::map<std::string, Preset> kPresets{
    {"fig1", Preset::fig1}, {"fig2", Preset::fig2}, {"fig3", Preset::fig3},
    {"fig5", Preset::fig5}, {"fig8", Preset::fig8}, {"custom", Preset::custom}};

const std::map<std::string, OutputFormat> kFormats{{"csv", OutputFormat::csv},
                                                   {"json", OutputFormat::json}};

const std::map<std::string, SumConvention> kUnits{{"literal", SumConvention::literal},
                                                  {"scaled", SumConvention::scaled}};

// CLI11 wants argv order reversed when given a vector.
void parse(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
}

nlohmann::ordered_json number(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json number(const std::optional<double>& v) {
  return v ? number(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

SweepSpec parse_config(const std::vector<std::string>& args) {
  CLI::App app("Run a parameter sweep and emit CSV or JSON", "qhe sweep");
  std::string preset = "fig1";
  std::optional<double> l_min, l_max;
  int steps = 50;
  double hot = 320.0, cold = 80.0, mass = kElectronMass;
  std::vector<int> pinned{1, 2};
  std::string format = "csv", out = "-", units = "literal";
  std::vector<std::string> quantities;

  app.add_option("--preset", preset, "fig1, fig2, fig3, fig5, fig8 or custom")
      ->check(CLI::IsMember(kPresets));
  app.add_option("--l-min", l_min, "smallest half-width L in nm");
  app.add_option("--l-max", l_max, "largest half-width L in nm");
  app.add_option("--steps", steps, "number of lengths");
  app.add_option("--hot", hot, "hot bath temperature (K)");
  app.add_option("--cold", cold, "cold bath temperature (K)");
  app.add_option("--mass", mass, "particle mass (kg)");
  app.add_option("--pinned-n", pinned, "pinned mean quantum numbers")->delimiter(',');
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember(kFormats));
  app.add_option("--out", out, "output file, - for standard output");
  app.add_option("--units", units, "literal or scaled sums for fig1-3 and custom")
      ->check(CLI::IsMember(kUnits));
  app.add_option("--quantities", quantities, "columns for the custom preset")->delimiter(',');
  app.set_config("--config", "", "flat key = value file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  parse(app, args);

  SweepSpec spec;
  spec.preset = kPresets.at(preset);
  spec.l_range = default_range(spec.preset);
  if (l_min) spec.l_range.min_nm = *l_min;
  if (l_max) spec.l_range.max_nm = *l_max;
  spec.l_range.steps = steps;
  spec.temperatures = {hot, cold};
  spec.pinned_n = pinned;
  spec.mass = mass;
  spec.output_format = kFormats.at(format);
  spec.output_path = out;
  spec.units = kUnits.at(units);
  spec.quantities = quantities;
  spec.validate();
  return spec;
}

CycleSpec parse_cycle_args(const std::vector<std::string>& args) {
  CLI::App app("Evaluate one Stirling cycle and print it as JSON", "qhe cycle");
  CycleSpec spec;
  std::string mode = "exact";
  app.add_option("--length", spec.length_nm, "half-width L in nm");
  app.add_option("--hot", spec.hot, "hot bath temperature (K)");
  app.add_option("--cold", spec.cold, "cold bath temperature (K)");
  app.add_option("--mass", spec.mass, "particle mass (kg)");
  app.add_option("--mode", mode, "exact or gaussian partition functions")
      ->check(CLI::IsMember({"exact", "gaussian"}));
  app.add_option("--out", spec.output_path, "output file, - for standard output");
  app.set_config("--config", "", "flat key = value file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  parse(app, args);
  spec.gaussian = mode == "gaussian";
  if (!(spec.length_nm > 0.0)) throw UsageError("length must be positive");
  if (!(spec.mass > 0.0)) throw UsageError("mass must be positive");
  if (!(spec.cold > 0.0) || !(spec.hot > spec.cold)) {
    throw UsageError("temperatures must satisfy hot > cold > 0");
  }
  return spec;
}

std::string cycle_json(const CycleSpec& spec) {
  CycleConfig cfg;
  cfg.geom = WellGeometry(spec.length_nm * 1e-9, spec.mass);
  cfg.hot_T1 = spec.hot;
  cfg.cold_T2 = spec.cold;
  cfg.evaluation_mode = spec.gaussian ? PartitionMode::gaussian : PartitionMode::exact_series;
  const auto r = evaluate_cycle(cfg);

  nlohmann::ordered_json j;
  j["L_nm"] = spec.length_nm;
  j["hot_T1"] = spec.hot;
  j["cold_T2"] = spec.cold;
  j["mass"] = spec.mass;
  j["mode"] = spec.gaussian ? "gaussian" : "exact";
  j["alpha_beta_hot"] = number(r.alpha_beta_hot);
  j["alpha_beta_cold"] = number(r.alpha_beta_cold);
  j["z_a"] = number(r.z_a);
  j["z_b"] = number(r.z_b);
  j["z_c"] = number(r.z_c);
  j["z_d"] = number(r.z_d);
  j["u_a"] = number(r.u_a);
  j["u_b"] = number(r.u_b);
  j["u_c"] = number(r.u_c);
  j["u_d"] = number(r.u_d);
  j["q_ab"] = number(r.q_ab);
  j["q_bc"] = number(r.q_bc);
  j["q_cd"] = number(r.q_cd);
  j["q_da"] = number(r.q_da);
  j["work"] = number(r.work);
  j["work_uncertainty_literal"] = number(r.work_uncertainty_literal);
  j["work_uncertainty_normalized"] = number(r.work_uncertainty_normalized);
  j["eta_direct"] = number(r.eta_direct);
  j["eta_uncertainty"] = number(r.eta_uncertainty);
  j["carnot"] = number(r.carnot);
  j["d_coeff"] = number(r.d_coeff);
  j["e_coeff"] = number(r.e_coeff);
  j["engine_regime"] = r.engine_regime;
  j["carnot_violation"] = r.carnot_violation;
  j["bridge_regime"] = r.bridge_regime;
  return j.dump(2) + "\n";
}

void write_cycle(const CycleSpec& spec) { write_text(spec.output_path, cycle_json(spec)); }

}  // namespace qhe::sweep

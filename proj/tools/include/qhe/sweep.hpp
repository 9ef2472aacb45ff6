#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhe/constants.hpp"
#include "qhe/uncertainty.hpp"

namespace qhe::sweep {

/// Bad command line or configuration. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written. Maps to exit status 3 like other runtime
/// failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Preset { fig1, fig2, fig3, fig5, fig8, custom };
enum class OutputFormat { csv, json };

struct LengthRange {
  double min_nm = 0.2;
  double max_nm = 5.0;
  int steps = 50;
};

struct SweepSpec {
  Preset preset = Preset::fig1;
  LengthRange l_range;
  /// Hot bath first. fig1 plots every entry; fig2/fig3/fig5 use the first
  /// (fig5 also the second); fig8 and cycle quantities use the first two.
  std::vector<double> temperatures{320.0, 80.0};
  std::vector<int> pinned_n{1, 2};
  double mass = kElectronMass;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path = "-";
  /// Units of mixed position/momentum sums for fig1, fig2, fig3 and custom.
  /// fig5 and fig8 always use well units.
  SumConvention units = SumConvention::literal;
  /// Column selection for the custom preset.
  std::vector<std::string> quantities;

  /// Throws UsageError with a message naming the offending field.
  void validate() const;
};

/// Default length range of a preset, in nm. fig5 and fig8 start where the
/// bridge expansion holds at the cold bath.
LengthRange default_range(Preset preset);

std::vector<double> length_grid_nm(const LengthRange& range);

/// Quantity names accepted by the custom preset.
const std::vector<std::string>& custom_quantities();

/// Rows share one column list. Flag columns hold 0 or 1 and are written as
/// booleans.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<bool> is_flag;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& name) const;
  double at(std::size_t row, const std::string& name) const;
};

SweepTable run_sweep(const SweepSpec& spec);

std::string format_csv(const SweepTable& table);
std::string format_json(const SweepTable& table);

/// Writes to spec.output_path ("-" for standard output).
void write_output(const SweepTable& table, const SweepSpec& spec);

/// Parses `sweep` arguments (without the subcommand name). Precedence is
/// command line, then the --config file (flat key = value, keys are the long
/// flag names), then defaults.
SweepSpec parse_config(const std::vector<std::string>& args);

std::string preset_name(Preset preset);

/// Arguments of the `cycle` subcommand.
struct CycleSpec {
  double length_nm = 5.0;
  double hot = 320.0;
  double cold = 80.0;
  double mass = kElectronMass;
  bool gaussian = false;
  std::string output_path = "-";
};

CycleSpec parse_cycle_args(const std::vector<std::string>& args);

/// Every CycleResult field as one JSON object (non-finite values and empty
/// uncertainty-form values become null).
std::string cycle_json(const CycleSpec& spec);

/// Writes cycle_json to spec.output_path ("-" for standard output).
void write_cycle(const CycleSpec& spec);

}  // namespace qhe::sweep

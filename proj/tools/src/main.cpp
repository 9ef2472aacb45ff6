// qhe: sweeps and single-cycle dumps for the quantum well heat engine.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "qhe/errors.hpp"
#include "qhe/sweep.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kRuntime = 3;

void usage(std::ostream& os) {
  os << "usage: qhe <command> [options]\n\n"
        "commands:\n"
        "  sweep   parameter sweep (qhe sweep --help)\n"
        "  cycle   one Stirling cycle as JSON (qhe cycle --help)\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qhe::sweep;
  if (argc < 2) {
    usage(std::cerr);
    return kUsage;
  }
  const std::string command = argv[1];
  const std::vector<std::string> args(argv + 2, argv + argc);
  try {
    if (command == "sweep") {
      const auto spec = parse_config(args);
      write_output(run_sweep(spec), spec);
    } else if (command == "cycle") {
      write_cycle(parse_cycle_args(args));
    } else if (command == "-h" || command == "--help") {
      usage(std::cout);
    } else {
      std::cerr << "qhe: unknown command '" << command << "'\n";
      usage(std::cerr);
      return kUsage;
    }
  } catch (const HelpRequested& h) {
    std::cout << h.what();
  } catch (const UsageError& e) {
    std::cerr << "qhe " << command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qhe " << command << ": " << e.what() << "\n";
    return kRuntime;
  }
  return 0;
}

#pragma once

// Command-line front end. run_cli is the whole program; tools/diskslep.cpp
// only forwards argv and the standard streams.
//
// Exit status: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure.

#include <optional>
#include <ostream>
#include <string>

namespace diskslep::cli {

enum class Command { eigs, eval, tabulate, verify, transform };

enum class OutputFormat { csv, json };

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

constexpr int kSchemaVersion = 1;

struct RunConfig {
  Command command = Command::eigs;
  double nu = 0.0;
  double c = 1.0;
  int N = 0;
  int modes = 5;
  int mode = 0;  ///< eval/tabulate: which radial mode
  int grid_r = 16;
  int grid_theta = 32;
  std::string target = "psi";  ///< tabulate: psi or phi
  double r = 0.5;              ///< eval point
  double theta = 0.0;
  std::string suite = "all";
  bool quick = false;
  std::optional<double> tol;
  std::string out;
  OutputFormat format = OutputFormat::csv;

  // transform
  std::string family = "disk";  ///< disk, gegenbauer or jacobi
  int n = 0;
  int m = 0;
  int k = 0;
  double rho = 1.0;
  double angle = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double x = 1.0;
  std::string constant = "derived";
  std::string shape = "corrected";

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// %.17g, the CSV number format.
std::string format_number(double v);

}  // namespace diskslep::cli

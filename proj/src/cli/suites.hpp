#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskslep/transforms.hpp"

namespace diskslep::cli {

struct Check {
  std::string suite;
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<double> value;  ///< a reference value worth printing, if any
};

struct SuiteOptions {
  bool quick = false;
  std::optional<double> tolerance;  ///< replaces every default tolerance
  GegenbauerShape shape = GegenbauerShape::corrected;
};

const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one suite; "all" runs every suite in order.
std::vector<Check> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace diskslep::cli

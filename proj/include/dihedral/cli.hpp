#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dihedral::cli {

// Resolved job parameters.  Values come from an optional JSON config file
// (--config) and are overridden by command-line flags.
struct JobConfig {
  std::vector<long> betas;
  std::vector<long> gammas;
  long n = 0;
  long n_max = 0;
  std::string engine = "all";  // all | exact | oracle | spectral | chebyshev
  std::string format = "text";  // text | json | csv
  long grid = 1 << 16;
  long terms = 0;  // 0 = auto-size from the polynomial degree
  std::string export_format = "dot";  // dot | edges
};

// Runs the driver on argv-style arguments (program name excluded), writing
// results to out and diagnostics to err.  Returns the process exit code:
// 0 success, 1 domain error, 2 usage error, 3 property violation.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dihedral::cli

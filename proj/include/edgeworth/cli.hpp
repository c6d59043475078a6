#pragma once

// Command implementations behind the edgeworth-lab executable. Each command
// writes data to `out` and diagnostics to `err`, and throws on invalid input.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgeworth/metrics.hpp"
#include "edgeworth/moments.hpp"

namespace edgeworth::cli {

struct RunConfig {
  std::string command;
  int n = 35;
  std::optional<double> rho;
  std::string transform = "identity";  // identity | arctanh | basic-fisher
  bool include_gamma3 = true;
  bool include_gamma4 = true;
  int grid = kDefaultGridPoints;
  double clip = kDefaultClip;
  std::size_t reps = 100000;
  std::uint64_t seed = 1;
  std::string format;  // csv | json; empty picks the command default
  std::string out;     // empty writes to standard output
  std::vector<int> index;  // moment
  std::string table;       // moment: optional JSON moment table
};

/// Throws UsageError when a field is out of range for `command`.
void validate(const RunConfig& config);

/// Output format after applying the command default (csv for pdf, else json).
std::string resolved_format(const RunConfig& config);

/// Density of r for the configured model (Edgeworth or basic Fisher).
std::function<double(double)> model_pdf(const RunConfig& config);

/// Reads {"dimension": d, "max_order": k, "moments": [{"index": [...], "value": x}, ...]}.
MomentTable read_moment_table(const std::string& json_text);

void cmd_summary(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_pdf(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_moment(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_mc(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Validates and dispatches on config.command.
void run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace edgeworth::cli

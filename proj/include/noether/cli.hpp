#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "noether/io.hpp"
#include "noether/limits.hpp"

namespace noether::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kError = 1, kValidationFailure = 2 };

/// Run configuration: caps, seed, output format and tolerance override.
struct RunConfig {
    Limits limits;
    std::uint64_t seed = 7;
    std::string format = "json";      // json | text
    std::optional<double> tolerance;  // overrides the pinned numeric tolerances
    std::string out;                  // report file; empty means stdout
};

/// Applies a caps file ({"max_gb_pairs": n, "max_gb_degree": n, "max_elements": n,
/// "seed": n, "tol": x, "format": "json"|"text"}) on top of cfg.
void apply_caps_file(RunConfig& cfg, const std::string& path);

/// Renders a report as indented JSON or as flattened "path: value" lines.
std::string render(const Json& report, const std::string& format);

/// Parses argv (without the program name) and runs one subcommand.  The report
/// goes to `out` (or the --out file); diagnostics and usage go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noether::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liouville::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsage = 2 };

/// A bad flag or value; the message names the flag and its valid range.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> params;  // flag name (without "--") -> raw value
  std::optional<std::string> out;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

/// Parses argv (without the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs a parsed configuration. Artifacts go to the --out path, else to
/// $LIOUVILLE_OUT_DIR/<subcommand>.<ext> when that variable is set, else to
/// `out`. Human-readable summaries go to `log`.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// parse_args + run, mapping usage errors to exit code 2.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

}  // namespace liouville::cli

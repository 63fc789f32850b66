#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfball_cli/document.hpp"

namespace lfball::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitSchema = 2,
  kExitNumerical = 3,
  kExitInvariant = 4,
};

/// A check that must hold for a correct implementation failed.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(const std::string& what, nlohmann::json report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const nlohmann::json& report() const noexcept { return report_; }

 private:
  nlohmann::json report_;
};

struct Options {
  std::uint64_t seed = 42;
  std::optional<double> beta;  ///< defaults to m (Hardy space) where needed
  std::size_t iters = 500;
  std::size_t points = 50;
  double tol = 1e-8;
  double alpha = 0.25;  ///< counterexample only
  std::size_t m = 2;    ///< counterexample only
};

/// Header row plus numeric rows; missing values are written as empty fields.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  std::string str() const;
};

struct CommandOutput {
  nlohmann::json report;
  std::optional<Csv> csv;
};

/// Each command returns the report body: "command", "input_digest",
/// "parameters", "results" and "warnings". Callers add "wall_time_s".
CommandOutput cmd_validate(const MapDocument& doc, const std::string& digest, const Options& opt);
CommandOutput cmd_classify(const MapDocument& doc, const std::string& digest, const Options& opt);
CommandOutput cmd_specrad(const MapDocument& doc, const std::string& digest, const Options& opt);
CommandOutput cmd_kernel_check(const MapDocument& doc, const std::string& digest,
                               const Options& opt);
CommandOutput cmd_normbounds(const MapDocument& doc, const std::string& digest,
                             const Options& opt);
CommandOutput cmd_factor(const MapDocument& doc, const std::string& digest, const Options& opt);
CommandOutput cmd_counterexample(const Options& opt);

/// FNV-1a digest of the compact report with "wall_time_s" and
/// "report_digest" removed.
std::string report_digest(const nlohmann::json& report);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfball::cli

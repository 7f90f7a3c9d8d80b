#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tatecli {

enum class OutputFormat { Text, Json };

/// Bad flags, malformed radii, unreadable input. Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::string subcommand;
  unsigned long prime = 2;
  std::optional<std::string> radii;    // comma separated, "inf" allowed
  std::optional<std::string> s_radii;  // overconvergent reduction when set
  std::string order = "grevlex";
  std::optional<std::string> vars;

  // generator sources, first one that is set wins
  std::optional<std::string> input_file;
  std::optional<std::string> system;
  std::optional<std::string> gens;
  // second ideal (intersect, colon by an ideal)
  std::optional<std::string> input_file2;
  std::optional<std::string> gens2;

  std::optional<std::string> f;         // wnf dividend, colon/saturate polynomial
  std::optional<std::string> variable;  // eliminate
  std::optional<std::string> r0;        // finite elimination weight
  std::optional<std::string> budget;    // overconvergent valuation budget (absolute)

  // fan
  std::optional<std::string> grid_lo, grid_hi, grid_step;
  std::optional<std::string> check_step;

  // bench
  std::vector<std::string> bench_systems;
  std::vector<std::string> expect_timeout;

  double timeout_seconds = 0;  // 0 means none
  std::size_t step_limit = 0;
  bool timings = false;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> stats_file;
};

/// Runs one job, writes the report to stdout and returns the exit code.
int run(const JobConfig& job);

}  // namespace tatecli

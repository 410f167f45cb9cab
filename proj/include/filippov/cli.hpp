#pragma once

// The command layer behind the filippov_lab executable, kept free of
// argument parsing so tests can drive it directly.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace filippov::cli {

enum class Command { make, validate, derivations, check_extension, extend, cube, rep_check };
enum class ReportFormat { text, json };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

struct RunConfig {
  Command command = Command::validate;
  std::vector<std::filesystem::path> inputs;
  ReportFormat format = ReportFormat::text;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::size_t witness_cap = 16;
  unsigned jobs = 1;
  /// make: where to write the fixture; cube: where to write the carrier.
  std::optional<std::filesystem::path> output;
  /// make only.
  std::string fixture;
  std::size_t fixture_dim = 0;
};

struct RunResult {
  /// 0 all checks pass, 1 some check failed, 2 input error.
  int exit_code = 0;
  std::string report;
};

RunResult run(const RunConfig& config);

/// FILIPPOV_LAB_JOBS if set to a positive integer, else 1.
unsigned default_jobs();

/// Names accepted by `make`.
std::vector<std::string> fixture_names();

}  // namespace filippov::cli

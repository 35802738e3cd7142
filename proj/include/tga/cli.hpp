#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tga/errors.hpp"
#include "tga/int_matrix.hpp"

namespace tga {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Exit codes of run and sweep.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidConfig = 2;

/// Missing or ill-typed configuration fields.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A single command invocation. `params` holds the command-specific fields;
/// the whole struct round-trips through JSON.
struct ExperimentConfig {
  std::string command;
  Json params = Json::object();
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string out;

  Json to_json() const;
  /// Throws ConfigError.
  static ExperimentConfig from_json(const Json& j);
};

struct Report {
  Json body;
  int exit_code = kExitOk;
  double wall_clock_ms = 0;
};

/// Dispatches to the owning module. The body is
/// {schemaVersion, command, config, results, check: {routine, passed},
/// witness?, error?}. Never throws: invalid configs give exit code 2 and
/// failed checks exit code 1.
Report run(const ExperimentConfig& config);

/// Pretty JSON. With `wall_clock` the field wallClockMs is added; without it
/// the text is a pure function of the config.
std::string render(const Report& report, bool wall_clock = true);

/// Known command names ("action.verify", ...), sorted.
std::vector<std::string> command_names();

/// One command run for each value of one parameter.
struct SweepSpec {
  ExperimentConfig base;
  std::string parameter;
  std::vector<Json> values;

  Json to_json() const;
  static SweepSpec from_json(const Json& j);
};

struct SweepResult {
  /// {schemaVersion, command: "sweep", base, parameter, rows: [{value,
  /// exitCode, passed, routine, results | error}]}
  Json table;
  /// value, exitCode, passed and every scalar field of the results, columns
  /// sorted by name.
  std::string csv;
  /// 1 if any row failed its check, 2 if the base command is unknown.
  int exit_code = kExitOk;
};

/// Rows run on the worker pool and are collected in value order; a failing
/// row is recorded and the sweep continues.
SweepResult sweep(const SweepSpec& spec);

/// "a,b,c,d" or an array of four integers; "a,b,c,d;e,f,g,h" or an array of
/// such entries for generator lists.
IntMatrix parse_matrix(const Json& j);
std::vector<IntMatrix> parse_matrix_list(const Json& j);

}  // namespace tga

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pellian {

struct RunConfig {
  long precision_start = 128;
  long precision_ceiling = 8192;
  mpz_class y_cap = 10000;
  mpz_class q_max = 10000;
  std::string output_format = "json";  // json | csv | text
  std::uint64_t seed = 1;
  bool timing = false;
};

// Throws InvalidInput("bad_config") on a broken invariant.
void check_config(const RunConfig& config);

// Applies "key = value" lines; '#' starts a comment. Unknown keys and
// malformed values are rejected.
void apply_config_text(RunConfig& config, const std::string& text);
void apply_config_file(RunConfig& config, const std::string& path);

// Reads PELLIAN_PRECISION_CEILING if it is set.
void apply_environment(RunConfig& config);

struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Parses argv-style arguments (without the program name) and runs one
// subcommand. Errors come back as an exit code plus a JSON error on err.
CommandOutput run_command(const std::vector<std::string>& args);

}  // namespace pellian

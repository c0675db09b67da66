#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cli_util {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

// Runs a shell command, capturing stdout; stderr passes through.
inline RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Path of the gammakit binary, from the environment (set by ctest).
inline std::string cli_path() {
  const char* env = std::getenv("GAMMAKIT_CLI");
  if (env && *env) return env;
  return "./tools/gammakit";
}

}  // namespace cli_util

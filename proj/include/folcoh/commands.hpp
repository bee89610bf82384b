#pragma once

#include <string>
#include <vector>

namespace folcoh {

/// Outcome of one CLI invocation. status 0 = success, 1 = validation
/// failure, 2 = parse or usage failure; out goes to stdout, err to stderr.
struct CommandResult {
  int status = 0;
  std::string out;
  std::string err;
};

/// Dispatches one command; args is argv without the program name, e.g.
/// {"betti", "catalog:sl2", "--json"}. Payloads are addressed as
/// <file>:<name> or catalog:<name>. Never throws.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace folcoh

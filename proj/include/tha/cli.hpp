#ifndef THA_CLI_HPP
#define THA_CLI_HPP

#include <string>
#include <vector>

namespace tha {

struct CommandResult {
  /// 0 success / valid / found, 1 invalid / not found, 2 input or parse error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line; args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace tha

#endif

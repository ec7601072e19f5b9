#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace charvar {

// Exit codes of the command line front end.
enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitBadInput = 2, kExitTooLarge = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace charvar

#pragma once

#include <iosfwd>
#include <string>

namespace octica {

enum ExitCode { ExitOk = 0, ExitCheckFailed = 1, ExitDataError = 2, ExitInternal = 3 };

// Parses argv and runs one subcommand, writing to out and err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// roff manual page built from the same command definitions as --help.
std::string man_page();

}  // namespace octica

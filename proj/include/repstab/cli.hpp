#ifndef REPSTAB_CLI_HPP
#define REPSTAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace repstab::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_assertion = 1,
    exit_usage = 2,
    exit_input = 3,
    exit_scale = 4,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace repstab::cli

#endif

#ifndef HSINTEG_CLI_HPP
#define HSINTEG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hsinteg
{

// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_resource = 2,
    exit_verify_failed = 3,
    exit_internal = 4,
};

// args excludes the program name. Resets the process-wide limits before
// applying the resource flags.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hsinteg

#endif

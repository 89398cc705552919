#ifndef KINGS_CLI_HPP
#define KINGS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kings {

// Runs one command (args exclude the program name) and writes the result
// envelope to out, diagnostics to err. Exit code: 0 computed (whatever the
// mathematical verdict), 2 usage error, 3 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kings

#endif

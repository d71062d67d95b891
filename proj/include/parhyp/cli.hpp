#ifndef PARHYP_CLI_HPP
#define PARHYP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace parhyp {

// Full command dispatch; args exclude the program name.  Returns the process
// exit code: 0 pass, 1 verification failure, 2 usage/config error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace parhyp

#endif

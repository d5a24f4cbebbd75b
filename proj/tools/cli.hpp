// Command-line front end.  Exit codes: 0 pass, 1 axiom violation or invalid
// source, 2 usage, I/O, schema or scale error.

#ifndef LAGMAT_TOOLS_CLI_HPP
#define LAGMAT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lagmat::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagmat::cli

#endif  // LAGMAT_TOOLS_CLI_HPP

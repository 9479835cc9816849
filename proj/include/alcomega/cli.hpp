// ============================================================================
// alcomega/cli.hpp — command-line entry point
// ============================================================================
//
// Exit codes: 0/1/2 report the decide verdict (Entailed / NotEntailed /
// Unknown); 64 = usage error, 65 = bad input data, 66 = missing/unreadable
// file, 70 = internal consistency failure (the Conflict bug trap).
// ============================================================================

#ifndef ALCOMEGA_CLI_HPP
#define ALCOMEGA_CLI_HPP

#include <string>
#include <vector>

namespace alcomega::cli {

int run(const std::vector<std::string>& args);

}  // namespace alcomega::cli

#endif  // ALCOMEGA_CLI_HPP

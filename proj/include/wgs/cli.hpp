#ifndef WGS_CLI_HPP_
#define WGS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wgs {

// Command-line entry point, callable in-process for tests. args excludes
// the program name. Returns 0 on success, 1 on domain or verification
// failures, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace wgs

#endif  // WGS_CLI_HPP_

#ifndef GCA_CLI_HPP
#define GCA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gca {

/// Runs one tool command line (without the program name). Returns the
/// process exit code: 0 on success, 2 on parse/usage errors, 3 on
/// computation errors, 4 on audit violations or reproduction mismatches.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace gca

#endif  // GCA_CLI_HPP

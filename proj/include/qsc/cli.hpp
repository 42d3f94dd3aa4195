#ifndef QSC_CLI_HPP
#define QSC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qsc::cli {

// Runs one tool invocation; args is argv without the program name. Returns
// the process exit status: 0 all checks passed, 1 verification mismatch,
// 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qsc::cli

#endif

#ifndef PIERCER_CLI_HPP
#define PIERCER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace piercer {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kInvalidInput = 2,
    kClaimViolation = 3,
};

/// Runs one piercer command line. argv[0] is the program name.
int cli_dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace piercer

#endif

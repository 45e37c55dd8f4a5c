#ifndef LIEOB_CLI_HPP
#define LIEOB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lieob::cli {

/// Exit codes: 0 success, 1 input or usage error, 2 strict-mode Undetermined.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lieob::cli

#endif

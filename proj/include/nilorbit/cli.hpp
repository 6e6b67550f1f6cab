#ifndef NILORBIT_CLI_HPP
#define NILORBIT_CLI_HPP

namespace nilorbit {

/// Full command-line front end. Exit codes: 0 success, 1 validation or
/// input error, 2 indeterminate orbit membership, 3 usage error.
int run_cli(int argc, const char* const* argv);

} // namespace nilorbit

#endif

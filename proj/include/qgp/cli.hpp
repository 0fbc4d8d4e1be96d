#ifndef QGP_CLI_HPP
#define QGP_CLI_HPP

namespace qgp {

/// Command dispatch for the qgp tool. Exit codes: 0 success, 1 asserted
/// property false, 2 input error, 3 broken internal invariant.
int run_cli(int argc, const char* const* argv);

} // namespace qgp

#endif

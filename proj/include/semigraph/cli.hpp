#pragma once

#include <iosfwd>

namespace semigraph {

// Full command-line surface, decoupled from the process entry point so
// tests can drive it in-process. Data goes to `out`, diagnostics to `err`;
// `in` serves inputs passed as "-".
// Exit codes: 0 success, 1 I/O failure, 2 validation/usage failure,
// 3 eigensolver non-convergence.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace semigraph

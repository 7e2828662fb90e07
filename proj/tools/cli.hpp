#pragma once

#include <iosfwd>

namespace udgcut::cli {

/// Exit codes: 0 success, 1 validation or certification failure,
/// 2 malformed input or bad arguments.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udgcut::cli

#pragma once

#include <ostream>

namespace latmed::cli {

/// Entry point of the `latmed` tool. Exit codes: 0 success or property holds,
/// 1 property fails or a violation was found, 2 usage, parameter or I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latmed::cli

#pragma once

#include <iosfwd>

namespace qaff::cli {

/// Exit codes: 0 every check passed, 1 a mathematical check failed,
/// 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qaff::cli

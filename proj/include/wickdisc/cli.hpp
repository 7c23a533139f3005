#pragma once

#include <iosfwd>

namespace wickdisc::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or format error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace wickdisc::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corecrank::cli {

// Dispatches one command line (without the program name). Results go to
// out, diagnostics to err. Exit status: 0 success, 1 verification failure,
// 2 argument errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corecrank::cli

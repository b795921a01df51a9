#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mspace::cli {

// Runs the mspace command line. Exit codes: 0 decision true / suite passed,
// 1 decision false / suite failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mspace::cli

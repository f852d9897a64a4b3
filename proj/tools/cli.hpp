#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace markedres::cli {

// args excludes the program name; returns the process exit code (0 ok, 1 negative answer, 2 bad input)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markedres::cli

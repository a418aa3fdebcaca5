#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncreal::cli {

/// Runs one command. args excludes the program name. Writes a single JSON
/// document to out and returns 0 (success), 1 (negative answer) or 2 (error).
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ncreal::cli

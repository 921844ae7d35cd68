#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hecke::cli {

/// Runs one command line (without the program name).
/// Returns 0 on success, 1 on a domain or I/O error, 2 on a parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Version string including the fixture-corpus hash.
std::string version();

}  // namespace hecke::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riordan {

/// Command-line driver behind the `riordan` binary. Arguments exclude the
/// program name. Returns 0 on success, 1 on invalid input, 2 when an exact
/// computation cannot proceed, 3 on network failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riordan

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphconf {

// Whole CLI as a function of argv (program name excluded): machine-readable
// results on out, logs on err. Returns 0 on success, 2 on invalid arguments,
// 3 on numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sphconf

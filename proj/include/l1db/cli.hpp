#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l1db::cli {

// Dispatches one command line (without the program name).  Returns the
// process exit code: 0 success, 1 domain/validation error, 2 verification
// failure, 3 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace l1db::cli

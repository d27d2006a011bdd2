#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surdeq {

/// Command-line front end. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 on domain errors or oracle
/// disagreement, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace surdeq

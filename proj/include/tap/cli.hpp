#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tap {

// Full command-line driver. Returns the process exit status: 0 on success,
// nonzero with a one-line diagnostic on err for any validation failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace tap

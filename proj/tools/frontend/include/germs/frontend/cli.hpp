#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace germs::frontend {

/// Full command-line front end. `args` excludes the program name. Results go
/// to `out` (one JSON document per command), usage errors to `err`. Returns
/// the process exit code: 0 ok, 1 diagnostic, 2 resource cap reached.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace germs::frontend

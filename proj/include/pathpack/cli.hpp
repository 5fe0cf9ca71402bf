#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathpack {

/// Entry point behind the `pathpack` executable. `args` excludes the program
/// name. Returns the process exit code: 0 on success, 1 on runtime errors,
/// 2 on usage errors. Diagnostics go to `err` only.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pathpack

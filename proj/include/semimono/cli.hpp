#pragma once

#include <iosfwd>

namespace semimono {

// Full command-line surface. Returns the process exit code: 0 on success,
// 1 when --strict-exit is set and a check reported failures, 2 on usage or
// input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semimono

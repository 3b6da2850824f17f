#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padyn {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 domain error (JSON {"error", "message"} on out), 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padyn

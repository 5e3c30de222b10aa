#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamloc {

// Exit codes: 0 success, 1 property violated, 2 usage or input error,
// 3 budget exceeded. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hamloc

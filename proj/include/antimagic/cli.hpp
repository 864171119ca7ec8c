#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antimagic::cli {

// Exit status: 0 all checks pass, 1 a check failed or input was rejected,
// 2 usage error.  args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace antimagic::cli

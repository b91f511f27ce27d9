#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nakct::cli {

// Exit codes: 0 mathematical yes, 1 mathematical no, 2 usage or validation
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nakct::cli

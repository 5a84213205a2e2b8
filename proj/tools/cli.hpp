#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stmax::cli {

// Full command-line driver; args exclude the program name.
// Exit codes: 0 success, 1 verdict disagreement or failed verification,
// 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stmax::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kernel2d {

inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes: 0 ok, 1 internal failure, 2 bad input or arguments, 3 infeasible instance.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, with args not including the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kernel2d

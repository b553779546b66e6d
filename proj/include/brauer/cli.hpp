#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace brauer::cli {

// Exit codes: 0 success/Equal, 2 Unknown, 3 NotEqualOverPlane,
// 4 input error, 5 internal invariant breach.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitNotEqual = 3;
inline constexpr int kExitInput = 4;
inline constexpr int kExitInternal = 5;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace brauer::cli

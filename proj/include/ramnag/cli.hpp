#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramnag::cli {

// Exit codes.
inline constexpr int kOk = 0;            // NoSolutions or a completed computation
inline constexpr int kInconclusive = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;        // a work budget was exceeded

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramnag::cli

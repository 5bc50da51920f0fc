#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msdmv::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDataError = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msdmv::cli

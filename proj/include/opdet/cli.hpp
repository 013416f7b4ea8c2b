#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opdet::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one `opdet` command; args excludes the program name.
/// Returns 0 on success, 1 when an identity or positivity check fails, 2 on bad input.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opdet::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modrep::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one `modrep` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modrep::cli

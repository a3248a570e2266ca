#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace braidlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kTrendFailure = 2,
  kQuadratureFailure = 3,
};

/// Parses "a,b,c" with optional inclusive ranges "lo..hi", e.g. "-8..-2,1,3".
/// Throws std::invalid_argument on malformed input.
std::vector<std::int64_t> parse_index_list(const std::string& text);

/// Like parse_index_list, but an entry may be "auto" (returned as nullopt).
std::vector<std::optional<int>> parse_terms_list(const std::string& text);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidlab::cli

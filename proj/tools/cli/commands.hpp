#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subrep::cli {

// Exit codes: 0 success (a negative verdict is still a success),
// 1 usage or parse error, 2 semantic error such as TooLarge.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 1;
inline constexpr int exit_semantic = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace subrep::cli

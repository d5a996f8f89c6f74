#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace bcft::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailures = 2;

/// Entry point of the `bcft` executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "x0,x1,x2,x3". Throws DomainError on anything else.
std::array<double, 4> parse_quad(const std::string& text);

}  // namespace bcft::cli

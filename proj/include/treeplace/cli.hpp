#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeplace {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // usage, I/O, parse, internal defects
inline constexpr int kExitInfeasible = 2;  // infeasible instance or violations found

// Entry point of the `treeplace` tool. args[0] is the program name; "-" as a
// path means the given streams.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace treeplace

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tametilt {
namespace cli {

// Runs one subcommand. Math output (or a structured error object) goes to
// `out`, logs to `err`. Returns the process exit status: 0 success,
// 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace tametilt

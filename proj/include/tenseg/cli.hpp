#pragma once

#include <string>
#include <vector>

namespace tenseg {

/// Command-line driver. Returns 0 on success, 1 on a negative domain
/// verdict (necessary condition fails, verification fails, demo assertion
/// fails), 2 on input or format errors. JSON goes to `out`, diagnostics to
/// `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv entry point; writes to stdout/stderr.
int runCli(int argc, const char* const* argv);

}  // namespace tenseg

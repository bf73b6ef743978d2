#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latticircle::cli {

// Exit codes of the latticircle tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidPath = 2;
inline constexpr int kExitOverflow = 3;

/// Runs one invocation of the tool; args excludes the program name.
/// Reports and data go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker cap from LATTICIRCLE_THREADS, or 0 (hardware concurrency) when unset.
unsigned threads_from_env();

}  // namespace latticircle::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace sqfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

/// Environment variable holding the worker count.
inline constexpr const char* kThreadsEnv = "SQFREE_THREADS";

/// Runs one command line (without the program name). Results go to `out`,
/// usage errors and progress to `err`. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from SQFREE_THREADS, falling back to hardware concurrency.
unsigned threads_from_environment();

}  // namespace sqfree::cli

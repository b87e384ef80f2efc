#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "gsbench/arena.hpp"
#include "gsbench/timer.hpp"

namespace gsbench {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidConfig = 2,
  kExitValidationFailed = 3,
  kExitIo = 4,
};

/// Hooks for tests; production runs use the steady clock and the default
/// allocator.
struct CliEnvironment {
  Timer *timer = nullptr;
  ArenaAllocator *allocator = nullptr;
};

/// The gsbench command line. `args` excludes the program name. Reports go to
/// `out` (or the -o file), diagnostics and the checksum line to `err`.
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err,
            const CliEnvironment &env = {});

} // namespace gsbench

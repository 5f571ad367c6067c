#pragma once

// The full command-line surface, runnable in-process (the test suites
// drive it without spawning). main() is a thin wrapper around run().

#include <iosfwd>
#include <string>
#include <vector>

namespace nlk3cli {

// Execute with the given arguments (argv without the program name).
// Machine output goes to `out`, diagnostics to `err`. Returns the process
// exit code:
//   0  success
//   2  usage / argument errors
//   3  the rank formula produced a non-integer (transcription guard)
//   4  domain errors (invalid divisor labels, unsupported genus, ...)
//   5  report ran and at least one check failed
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nlk3cli

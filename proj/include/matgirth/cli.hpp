#pragma once

#include <string>
#include <vector>

namespace matgirth::cli {

// One in-process invocation of the command line: the would-be process exit
// code plus everything written to stdout and stderr.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs the matgirth command line on `args` (program name excluded).  Never
// throws: parse errors, bad files, and invalid instances come back as exit
// code 2 with a message in `err`; a failing selftest exits 1.  Output is a
// pure function of the arguments, so identical calls produce identical
// bytes.
RunResult run_command(const std::vector<std::string>& args);

// The binary's main: forwards argv to run_command and streams the result.
int main_entry(int argc, char** argv);

}  // namespace matgirth::cli

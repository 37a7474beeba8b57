#pragma once

// Command-line front end. Subcommands: solve, reduce, verify, gen, bench.
// Reports are emitted as JSON on the output stream; exit codes are
//   0  solved / verified / generated,
//   1  property violation found (verification mismatch, witness replay drift),
//   2  usage or input error,
//   3  instance size cap exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace mcn {

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Convenience wrapper over argv for main(); writes to std::cout / std::cerr.
int run_cli(int argc, char** argv);

}  // namespace mcn

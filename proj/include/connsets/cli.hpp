#pragma once

#include <iosfwd>

namespace connsets::cli {

// Exit statuses of run().
enum Exit : int {
  ok = 0,
  claim_failed = 1,
  usage = 2,
  parse = 3,
  parameter = 4,
  resource = 5,
  contract = 6,
  io = 7,
};

// Parses argv (argv[0] is the program name) and executes one subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace connsets::cli

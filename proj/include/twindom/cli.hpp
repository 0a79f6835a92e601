#pragma once

#include <string>
#include <vector>

namespace twindom::cli {

// Everything a subcommand needs, filled from the parsed flags.
struct RunConfig {
  std::string subcommand;
  std::string input;        // file path or "-" for stdin
  std::string set_csv;      // check: comma separated vertex list
  int n = 0;
  int target = 0;           // search
  std::uint64_t seed = 0;
  std::uint64_t budget = 20000;
  int jobs = 1;
  int exact_cap = 20;
  int extremal_cap = 16;
  std::string method = "auto";  // exact | order8 | half | sinksource | auto
  std::string mode = "canonical";
  std::string to;           // convert target format
  std::string out;          // output path, empty for stdout
};

// Exit codes: 0 success/true, 1 false or not found, 2 input error,
// 3 precondition or capacity, 4 internal verification failure.
int run(int argc, const char* const* argv);

}  // namespace twindom::cli

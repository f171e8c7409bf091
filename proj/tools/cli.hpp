#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lcord/graph.hpp"

namespace lcord::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kHypothesis = 3,
  kSearchNone = 4,
  kBudgetExhausted = 5,
};

/// Inline family spec (path:5, cycle:7, complete:4, star:6, bipartite:2:3,
/// edges:4:0-1,1-2,2-3) or a path to a graph JSON file.
Graph resolve_graph(std::string_view spec);

/// Runs one command line (without the program name). Results go to `out`
/// unless --out is given; errors go to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcord::cli

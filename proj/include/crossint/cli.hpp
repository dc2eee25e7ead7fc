#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "crossint/bigraph.hpp"

namespace crossint {

// One parameter tuple of a verification grid.
struct GridTuple {
  Family family = Family::Sets;
  std::vector<int> params;
  BuildBudget budget;
  std::size_t subset_budget = std::size_t{1} << 24;  // exhaustive census while 2^|part| <= this
  std::size_t line = 0;
};

// Line format: "family p1 p2 ...", where a parameter may be a range "a..b"
// (the tuple list is the cartesian product). "budget vertices N" and
// "budget subsets N" apply to the tuples that follow. '#' starts a comment.
// Throws ParseError on malformed lines, unknown families or wrong arity.
std::vector<GridTuple> parse_grid(std::string_view text);

std::size_t family_arity(Family f);

// args[0] is the program name. Returns the process exit code:
// 0 ok, 1 verified mismatch, 2 usage / budget / hypothesis error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossint

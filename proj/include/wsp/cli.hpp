#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wsp/classify.hpp"
#include "wsp/ring.hpp"

namespace wsp {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; the JSON document goes to `out` (or --output).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "2,3,4" -> {2,3,4}; throws InvalidInput.
Degrees parseDegreeList(const std::string& text);

struct SelftestCase {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<SelftestCase> runSelftest();

/// The order on 1; x2, y2; z3; x2y2; x2z3, (x2z3+y2z3)/2; x2y2z3/2 with
/// |x2| = |y2| = 2, |z3| = 3, stored with x1 := x2, x2 := y2, x3 := z3.
OrderInput nonWeightedExampleOrder();

}  // namespace wsp

#pragma once

// Command-line surface. Structured JSON goes to `out`; human-readable
// summaries go to `err`. Exit codes: 0 success, 1 error (with a
// machine-readable {"error": ...} object on `out`), 2 for Unknown verdicts.

#include <iosfwd>
#include <string>
#include <vector>

namespace mukailat {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mukailat

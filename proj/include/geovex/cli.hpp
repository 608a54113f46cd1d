#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geovex {

/// Parses and runs one command line (argv without the program name).
/// Reports go to `out`, diagnostics to `err`. Exit codes: 0 the claim holds
/// (Holds/Certified/Consistent/definite derivative), 1 it is refuted
/// (Fails/Refuted/Violation), 2 undecided (Inconclusive/divergent),
/// 3 usage or configuration errors (including rejected premises).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace geovex

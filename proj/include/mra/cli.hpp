#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mra {

/// Command-line front end. Exit codes: 0 success / verdict as expected,
/// 1 refutation or expectation mismatch, 2 usage error, 3 engine failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mra

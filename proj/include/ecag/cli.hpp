#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecag {

/// Entry point shared by the binary and the tests.  args excludes argv[0].
/// Exit codes: 0 ok, 1 usage/config, 2 invariant violation, 3 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecag

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

/// Command-line front end.  `run` is the whole program minus process
/// plumbing, so tests can drive it in-process with captured streams.
///
/// Exit codes: 0 success, 1 parse or usage error, 2 unsafe rule,
/// 3 inconsistent extension, 4 resource limit.
namespace fourval::cli {

int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fourval::cli

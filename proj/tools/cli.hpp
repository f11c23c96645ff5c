#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusion::cli {

/// Runs one fusion-forge invocation. args excludes the program name.
/// Exit codes: 0 success, 1 semantic failure, 2 usage or parse error,
/// 3 resource bound.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fusion::cli

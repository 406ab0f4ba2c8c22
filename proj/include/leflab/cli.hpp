#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace leflab::cli {

/// Exit codes: 0 all verdicts pass, 1 failed mathematical verdict,
/// 2 usage error, 3 model load or validation failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leflab::cli

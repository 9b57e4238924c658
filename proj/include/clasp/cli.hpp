#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clasp {

/**
 * Command-line driver. Exit codes: 0 success, 1 domain or data errors,
 * 2 usage errors. All numeric output is deterministic for fixed inputs.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clasp

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ostrowski {

// Runs the command line tool on args (without the program name).  Returns
// 0 on success, 1 when a verification fails and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ostrowski

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace handsaw {

// Parses args (without the program name) and runs one command. Exit status:
// 0 success, 1 verification failure, 2 usage or input error. All output goes
// to the provided streams; identical inputs give byte-identical output
// regardless of the worker count.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace handsaw

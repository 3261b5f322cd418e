#pragma once

#include <iosfwd>

namespace bhl {

// exit codes: 0 all pass, 2 a check failed, 3 a precondition was violated, 1 usage or IO error
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace bhl

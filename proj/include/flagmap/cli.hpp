#ifndef FLAGMAP_CLI_HPP
#define FLAGMAP_CLI_HPP

#include <ostream>

namespace flagmap {

// Exit codes: 0 success, 1 invalid input, 2 resource bound exceeded,
// 3 decomposability verdict unknown.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagmap

#endif  // FLAGMAP_CLI_HPP

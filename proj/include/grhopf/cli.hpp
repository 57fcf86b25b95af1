#pragma once

#include <ostream>

namespace grhopf {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// verification or agreement check fails, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grhopf

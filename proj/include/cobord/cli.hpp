#pragma once

#include <ostream>

namespace cobord::cli {

// Exit codes: 0 success, 1 usage error, 2 verification failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cobord::cli

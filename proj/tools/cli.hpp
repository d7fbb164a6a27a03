#pragma once

#include <ostream>

namespace wst::cli {

/// Exit codes: 0 ok, 2 checked mathematical failure, 1 malformed input or usage.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wst::cli

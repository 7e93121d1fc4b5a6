#pragma once

#include <ostream>

namespace symcap {

// Exit codes: 0 success, 1 validation error, 2 property-check failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symcap

#pragma once

#include <iosfwd>

namespace qhyper {

// Full command-line front end; returns the process exit code.
// 0 verified/ok, 1 refuted, 2 inconclusive, 64+ usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qhyper

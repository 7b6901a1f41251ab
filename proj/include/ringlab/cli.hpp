#pragma once

#include <iosfwd>

namespace ringlab {

// Parses argv and runs one command, writing the single output document
// (JSON by default, CSV with --format csv) to `out` and diagnostics to
// `err`.  Exit code contract: 0 = all checks pass, 1 = usage or parse
// error, 2 = falsification (a failing sweep case, a failing acceptance
// criterion, or an aborting fault).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ringlab

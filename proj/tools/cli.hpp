#pragma once

#include <ostream>

namespace sporadic::cli {

// Entry point behind the sporadic binary; stdout JSON goes to out, the run
// manifest and diagnostics to err unless --manifest names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sporadic::cli

#pragma once

namespace phsq {

// Entry point behind the phsq binary. Exit status: 0 on success, 1 on input
// errors, 2 on internal inconsistencies.
int run_cli(int argc, const char* const* argv);

}  // namespace phsq

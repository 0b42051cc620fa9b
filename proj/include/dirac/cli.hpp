#pragma once

#include <string>
#include <vector>

namespace dirac {

// Uniform grid given as "start:stop:step".
struct GridSpec {
    double start = 0.0, stop = 0.0, step = 0.0;
};
GridSpec parse_grid(const std::string& text); // throws std::invalid_argument

// Runs every verification suite of one catalog example, appending one
// CSV-ish report line per check to `lines`. Returns false on any failure.
bool verify_example_suites(const std::string& name,
                           std::vector<std::string>& lines);

// Entry point behind main(): exit 0 on success, 1 on verification failure,
// 2 on usage errors.
int run_cli(int argc, const char* const* argv);

} // namespace dirac

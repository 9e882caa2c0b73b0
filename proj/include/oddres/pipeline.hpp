#pragma once

#include <iosfwd>

#include "oddres/run_config.hpp"

namespace oddres {

// Executes the configured command and writes CSV (with '#' provenance
// comments) to `out`. Returns the process exit code: 0 on success, 2 when a
// compare tolerance was missed. Hard errors throw; the CLI maps them to 1.
int run_pipeline(const RunConfig& cfg, std::ostream& out);

}  // namespace oddres

#pragma once

#include <ostream>

namespace vvmf {

/// Runs the full verification suite, printing one pass/fail line per
/// criterion; returns true when every criterion passes.
bool run_acceptance(std::ostream& out);

} // namespace vvmf

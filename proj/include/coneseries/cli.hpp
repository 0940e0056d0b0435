#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coneseries {

/// Runs one CLI invocation. Returns 0 on success, 1 on usage errors and 2 on
/// domain errors; errors are written to `err` as {"error", "detail"} JSON.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coneseries

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace concordia {

// Batch front end. Writes one JSON document to out; returns the process exit
// code (0 on success, 2 on validation errors, with {"error", "position"}).
// Identical inputs produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace concordia

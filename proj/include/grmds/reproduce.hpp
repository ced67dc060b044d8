#pragma once

#include <string>
#include <vector>

#include "grmds/json_io.hpp"

namespace grmds {

struct ExampleOutcome {
  std::string name;
  bool pass = false;
  std::vector<std::string> diffs;  // "field: expected X, got Y"
  double elapsed_ms = 0.0;
};

/// Golden file compiled into the library (data/golden.json).
const std::string& embedded_golden();

/// Recomputes every example in the golden document and compares field by field.
std::vector<ExampleOutcome> run_examples(const Json& golden);

}  // namespace grmds

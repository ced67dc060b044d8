#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace grmds {

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Verdict of an MDS check. The optional fields are filled by the checks that produce them.
struct VerificationReport {
  bool mds = false;
  std::optional<MinorWitness> witness;
  std::optional<bool> quasi_involutory;
  double elapsed_ms = 0.0;
  std::optional<unsigned> min_distance;
  std::optional<std::vector<unsigned>> failing_column_subset;
};

}  // namespace grmds

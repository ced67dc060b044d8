#pragma once

#include <cstdint>

#include "grmds/matrix.hpp"

namespace grmds {

/// Messages enumerated by the brute-force checks: |R|^k must stay within this.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

/// Linear code generated by [I_k | M].
struct CodeInstance {
  explicit CodeInstance(GRMatrix m);

  GRMatrix m;
  GRMatrix gen;
};

/// Exact minimum Hamming distance over ring symbols, by enumerating every nonzero message.
unsigned min_distance(const CodeInstance& code);

/// Every nonzero left multiple c * g with deg c < k has weight >= k + 1.
/// Requires g | X^n - 1 on the right.
bool weight_criterion_full(const SkewPoly& g, unsigned n);

/// Every nonzero combination of b_r = X^{t+r} - (X^{t+r} mod g), r < k, has weight >= k + 1.
bool weight_criterion_support(const SkewPoly& g, unsigned t);

}  // namespace grmds

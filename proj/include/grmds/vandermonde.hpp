#pragma once

#include <vector>

#include "grmds/matrix.hpp"

namespace grmds {

/// Strictly increasing list of non-negative exponents.
class ExponentSet {
 public:
  ExponentSet() = default;
  explicit ExponentSet(std::vector<unsigned> entries);

  /// {0, ..., k-1} together with {t, ..., t+k-1}.
  static ExponentSet support(unsigned k, unsigned t);
  static ExponentSet contiguous(unsigned k);

  const std::vector<unsigned>& entries() const noexcept { return e_; }
  std::size_t size() const noexcept { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }

 private:
  std::vector<unsigned> e_;
};

struct GenVandermonde {
  std::vector<RingElement> roots;
  ExponentSet columns;
  /// Entry (j, l) = N_{columns[l]}(roots[j]).
  GRMatrix matrix;
};

GenVandermonde gen_vandermonde(const std::vector<RingElement>& roots, const ExponentSet& columns);

/// prod_{i<j} (a_j - a_i)
RingElement classical_vdm_det(const std::vector<RingElement>& values);

/// Determinant of the (commutative) Vandermonde with exponent rows T. Supported shapes:
/// {0..k-1}; {0..k-2, k} (times the sum); {0, 2, ..., k-1, k+1} (times the product
/// and (sum a)(sum 1/a) - 1).
RingElement indexed_vdm_det(const std::vector<RingElement>& values, const ExponentSet& t);

/// U(h) with entry (i, j) = h_i^{p^j}.
GRMatrix linearized_matrix(const std::vector<RingElement>& h);

/// Closed-form det U(h) = h_0 prod_{j=0}^{k-2} prod_{c in Z_p^{j+1}} (h_{j+1} - sum_{i<=j} c_i h_i).
/// Only valid in characteristic p.
RingElement linearized_det(const std::vector<RingElement>& h, std::uint64_t p);

/// Builds V(roots; support(k, t)) and asks that every k-column subset be a unit
/// determinant. The exponents of the first failing subset (lexicographic) are reported.
VerificationReport mds_via_vandermonde(const std::vector<RingElement>& roots, unsigned k, unsigned t);

/// Lexicographic k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

}  // namespace grmds

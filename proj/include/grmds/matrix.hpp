#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grmds/report.hpp"
#include "grmds/ring.hpp"
#include "grmds/skew_poly.hpp"

namespace grmds {

/// Dense row-major matrix over one Galois ring.
class GRMatrix {
 public:
  GRMatrix() = default;
  /// Zero matrix.
  GRMatrix(Ring ring, std::size_t rows, std::size_t cols);
  GRMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<RingElement> entries);

  static GRMatrix identity(const Ring& ring, std::size_t k);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<RingElement>& entries() const noexcept { return a_; }

  RingElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const RingElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  GRMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Entrywise image in the residue field.
  GRMatrix projected() const;

  std::string to_string() const;

  GRMatrix operator-() const;
  friend GRMatrix operator*(const GRMatrix& a, const GRMatrix& b);
  friend bool operator==(const GRMatrix& a, const GRMatrix& b);

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElement> a_;
};

/// Superdiagonal ones, last row (-g_0, ..., -g_{k-1}). Needs g monic of degree >= 2.
GRMatrix companion(const SkewPoly& g);

/// Entrywise sigma^i.
GRMatrix sigma_twist(const GRMatrix& a, std::int64_t i);

/// C^{[t-1]} ... C^{[1]} C for C = companion(g).
GRMatrix twisted_chain(const SkewPoly& g, unsigned t);

/// Row r holds the coefficients of X^{t+r} mod g (right remainder); equals twisted_chain(g, t).
GRMatrix chain_from_remainders(const SkewPoly& g, unsigned t);

/// Cofactor expansion along rows, memoised over column subsets.
RingElement determinant(const GRMatrix& a);

/// Every square minor is a unit, decided over the residue field. The witness is the
/// first singular minor by size, then row subset, then column subset (lexicographic).
VerificationReport is_mds(const GRMatrix& a);

/// Same question answered directly in the ring (reference path).
bool all_minors_unit_in_ring(const GRMatrix& a);

/// sigma_twist(N, k) * N == I_k for N = twisted_chain(g, k). Requires g | X^{2k} - 1
/// on the right and ord(sigma) | 2k.
bool check_quasi_involutory(const SkewPoly& g);

}  // namespace grmds

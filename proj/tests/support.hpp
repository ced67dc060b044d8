#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "grmds/matrix.hpp"

namespace grmds::testing {

inline RingElement random_element(const Ring& ring, std::mt19937_64& rng) {
  std::vector<Coeff> c(ring->m());
  for (auto& x : c) x = rng() % ring->q();
  return RingElement(ring, std::move(c));
}

inline RingElement random_unit(const Ring& ring, std::mt19937_64& rng) {
  while (true) {
    RingElement x = random_element(ring, rng);
    if (x.is_unit()) return x;
  }
}

inline RingElement random_nilpotent(const Ring& ring, std::mt19937_64& rng) {
  return ring->from_int(static_cast<std::int64_t>(ring->p())) * random_element(ring, rng);
}

inline SkewPoly random_poly(const Ring& ring, int degree, std::mt19937_64& rng) {
  std::vector<RingElement> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element(ring, rng));
  return SkewPoly(ring, std::move(c));
}

inline SkewPoly random_monic(const Ring& ring, int degree, std::mt19937_64& rng) {
  std::vector<RingElement> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_element(ring, rng));
  c.push_back(ring->one());
  return SkewPoly(ring, std::move(c));
}

inline GRMatrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  GRMatrix a(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a.at(r, c) = random_element(ring, rng);
  }
  return a;
}

// Leibniz formula: sum over permutations with sign; independent of the cofactor code.
inline RingElement leibniz_det(const GRMatrix& a) {
  const std::size_t k = a.rows();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  RingElement total = a.ring()->zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    RingElement term = a.ring()->one();
    for (std::size_t i = 0; i < k; ++i) term *= a.at(i, perm[i]);
    if (inversions % 2) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Every square submatrix has a unit Leibniz determinant, checked in the ring itself.
inline bool all_minors_unit_leibniz(const GRMatrix& a) {
  const std::size_t k = a.rows();
  for (std::uint32_t rows = 1; rows < (1u << k); ++rows) {
    for (std::uint32_t cols = 1; cols < (1u << k); ++cols) {
      if (__builtin_popcount(rows) != __builtin_popcount(cols)) continue;
      std::vector<std::size_t> r, c;
      for (std::size_t i = 0; i < k; ++i) {
        if (rows & (1u << i)) r.push_back(i);
        if (cols & (1u << i)) c.push_back(i);
      }
      if (!leibniz_det(a.submatrix(r, c)).is_unit()) return false;
    }
  }
  return true;
}

// Minimum weight of u [I | M] by direct matrix products over every nonzero message.
inline unsigned brute_min_distance(const GRMatrix& m) {
  const Ring& ring = m.ring();
  const std::size_t k = m.rows();
  const std::uint64_t size = *ring->element_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= size;
  unsigned best = static_cast<unsigned>(2 * k);
  for (std::uint64_t index = 1; index < total; ++index) {
    GRMatrix u(ring, 1, k);
    std::uint64_t rest = index;
    unsigned weight = 0;
    for (std::size_t i = 0; i < k; ++i) {
      u.at(0, i) = ring->element_at(rest % size);
      rest /= size;
      weight += !u.at(0, i).is_zero();
    }
    const GRMatrix v = u * m;
    for (std::size_t i = 0; i < k; ++i) weight += !v.at(0, i).is_zero();
    best = std::min(best, weight);
  }
  return best;
}

}  // namespace grmds::testing

#include "grmds/vandermonde.hpp"

#include <algorithm>
#include <chrono>

#include "grmds/numtheory.hpp"

namespace grmds {

ExponentSet::ExponentSet(std::vector<unsigned> entries) : e_(std::move(entries)) {
  for (std::size_t i = 1; i < e_.size(); ++i) {
    if (e_[i] <= e_[i - 1]) throw Error(ErrorCode::BadParameter, "exponent set must be strictly increasing");
  }
}

ExponentSet ExponentSet::support(unsigned k, unsigned t) {
  if (t < k) throw Error(ErrorCode::BadParameter, "support set needs t >= k");
  std::vector<unsigned> e;
  for (unsigned i = 0; i < k; ++i) e.push_back(i);
  for (unsigned i = 0; i < k; ++i) e.push_back(t + i);
  return ExponentSet(std::move(e));
}

ExponentSet ExponentSet::contiguous(unsigned k) {
  std::vector<unsigned> e(k);
  for (unsigned i = 0; i < k; ++i) e[i] = i;
  return ExponentSet(std::move(e));
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    out.push_back(combo);
    std::size_t pos = k;
    while (pos > 0 && combo[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++combo[pos - 1];
    for (std::size_t i = pos; i < k; ++i) combo[i] = combo[i - 1] + 1;
  }
  return out;
}

GenVandermonde gen_vandermonde(const std::vector<RingElement>& roots, const ExponentSet& columns) {
  if (roots.empty()) throw Error(ErrorCode::BadParameter, "generalized Vandermonde needs roots");
  const Ring& ring = roots.front().ring();
  const unsigned top = columns.size() ? columns.entries().back() + 1 : 0;
  GRMatrix v(ring, roots.size(), columns.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (roots[j].ring() != ring && !roots[j].ring()->same_ring(*ring)) {
      throw Error(ErrorCode::MixedRings, "Vandermonde roots");
    }
    const auto norms = sigma_norms(roots[j], top);
    for (std::size_t l = 0; l < columns.size(); ++l) v.at(j, l) = norms[columns[l]];
  }
  return {roots, columns, std::move(v)};
}

RingElement classical_vdm_det(const std::vector<RingElement>& values) {
  if (values.empty()) throw Error(ErrorCode::BadParameter, "Vandermonde needs values");
  RingElement det = values.front().ring()->one();
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) det *= values[j] - values[i];
  }
  return det;
}

RingElement indexed_vdm_det(const std::vector<RingElement>& values, const ExponentSet& t) {
  const std::size_t k = values.size();
  if (t.size() != k || k == 0) throw Error(ErrorCode::UnsupportedShape, "need |T| = number of values");
  const auto& e = t.entries();
  if (e == ExponentSet::contiguous(static_cast<unsigned>(k)).entries()) return classical_vdm_det(values);
  if (k >= 2) {
    std::vector<unsigned> gap_top(k);
    for (std::size_t i = 0; i + 1 < k; ++i) gap_top[i] = static_cast<unsigned>(i);
    gap_top[k - 1] = static_cast<unsigned>(k);
    if (e == gap_top) {
      RingElement sum = values.front().ring()->zero();
      for (const auto& a : values) sum += a;
      return classical_vdm_det(values) * sum;
    }
    std::vector<unsigned> gap_one{0};
    for (std::size_t i = 2; i < k; ++i) gap_one.push_back(static_cast<unsigned>(i));
    gap_one.push_back(static_cast<unsigned>(k + 1));
    if (e == gap_one) {
      const Ring& ring = values.front().ring();
      RingElement sum = ring->zero();
      RingElement inv_sum = ring->zero();
      RingElement prod = ring->one();
      for (const auto& a : values) {
        if (!a.is_unit()) throw Error(ErrorCode::NotAUnit, "root " + a.to_string() + " has no inverse");
        sum += a;
        inv_sum += inverse(a);
        prod *= a;
      }
      return classical_vdm_det(values) * prod * (sum * inv_sum - ring->one());
    }
  }
  throw Error(ErrorCode::UnsupportedShape, "exponent pattern has no closed form here");
}

GRMatrix linearized_matrix(const std::vector<RingElement>& h) {
  if (h.empty()) throw Error(ErrorCode::BadParameter, "linearized matrix needs entries");
  const Ring& ring = h.front().ring();
  const std::size_t k = h.size();
  GRMatrix u(ring, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    RingElement x = h[i];
    for (std::size_t j = 0; j < k; ++j) {
      u.at(i, j) = x;
      x = x.pow(ring->p());
    }
  }
  return u;
}

RingElement linearized_det(const std::vector<RingElement>& h, std::uint64_t p) {
  if (h.empty()) throw Error(ErrorCode::BadParameter, "linearized determinant needs entries");
  const Ring& ring = h.front().ring();
  if (ring->p() != p || ring->s() != 1) {
    throw Error(ErrorCode::CharacteristicMismatch,
                "closed form needs characteristic " + std::to_string(p) + ", ring has " + std::to_string(ring->q()));
  }
  RingElement det = h.front();
  for (std::size_t j = 0; j + 1 < h.size(); ++j) {
    // Every combination c_0 h_0 + ... + c_j h_j with c in Z_p^{j+1}.
    std::vector<std::uint64_t> c(j + 1, 0);
    while (true) {
      RingElement combo = ring->zero();
      for (std::size_t i = 0; i <= j; ++i) {
        if (c[i]) combo += ring->from_int(static_cast<std::int64_t>(c[i])) * h[i];
      }
      det *= h[j + 1] - combo;
      std::size_t pos = 0;
      while (pos <= j && ++c[pos] == p) c[pos++] = 0;
      if (pos > j) break;
    }
  }
  return det;
}

VerificationReport mds_via_vandermonde(const std::vector<RingElement>& roots, unsigned k, unsigned t) {
  if (roots.size() != k) {
    throw Error(ErrorCode::BadParameter, "expected " + std::to_string(k) + " roots, got " + std::to_string(roots.size()));
  }
  const auto start = std::chrono::steady_clock::now();
  const GenVandermonde v = gen_vandermonde(roots, ExponentSet::support(k, t));
  const GRMatrix residue = v.matrix.projected();
  std::vector<std::size_t> all_rows(k);
  for (std::size_t i = 0; i < k; ++i) all_rows[i] = i;
  VerificationReport report;
  report.mds = true;
  for (const auto& cols : k_subsets(2 * k, k)) {
    if (determinant(residue.submatrix(all_rows, cols)).is_zero()) {
      report.mds = false;
      std::vector<unsigned> exponents;
      for (auto c : cols) exponents.push_back(v.columns[c]);
      report.failing_column_subset = std::move(exponents);
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace grmds

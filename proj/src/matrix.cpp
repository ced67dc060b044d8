#include "grmds/matrix.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace grmds {

namespace {

constexpr std::size_t kMaxMinorOrder = 12;
constexpr std::size_t kMaxDeterminantOrder = 16;

void require_square(const GRMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

// Subsets of {0..k-1} of every size, listed lexicographically by sorted index list.
struct SubsetTable {
  std::vector<std::vector<std::vector<std::size_t>>> lists;  // lists[j][rank]
  std::vector<std::vector<std::uint32_t>> masks;             // masks[j][rank]
  std::vector<std::int32_t> rank;                            // rank[mask] within its size

  explicit SubsetTable(std::size_t k) : lists(k + 1), masks(k + 1), rank(std::size_t{1} << k, -1) {
    for (std::size_t j = 0; j <= k; ++j) {
      std::vector<std::size_t> combo(j);
      for (std::size_t i = 0; i < j; ++i) combo[i] = i;
      while (true) {
        std::uint32_t mask = 0;
        for (auto i : combo) mask |= std::uint32_t{1} << i;
        rank[mask] = static_cast<std::int32_t>(masks[j].size());
        masks[j].push_back(mask);
        lists[j].push_back(combo);
        // Advance to the next combination in lexicographic order.
        std::size_t pos = j;
        while (pos > 0 && combo[pos - 1] == k - j + pos - 1) --pos;
        if (pos == 0) break;
        ++combo[pos - 1];
        for (std::size_t i = pos; i < j; ++i) combo[i] = combo[i - 1] + 1;
      }
    }
  }
};

// Walks every square minor in witness order, building order-j minors from
// order-(j-1) ones by Laplace expansion along the largest selected row.
// Works on raw coefficient vectors of `ctx`; `singular` decides failure.
template <class Singular>
std::optional<MinorWitness> first_singular_minor(const RingContext& ctx, const std::vector<std::vector<Coeff>>& entries,
                                                 std::size_t k, Singular singular) {
  if (k > kMaxMinorOrder) {
    throw Error(ErrorCode::BadParameter, "minor enumeration supports order <= " + std::to_string(kMaxMinorOrder));
  }
  const unsigned m = ctx.m();
  const std::uint64_t q = ctx.q();
  const SubsetTable subsets(k);
  std::vector<Coeff> prev;  // level j-1, flat [row rank][col rank][m]
  std::vector<Coeff> cur;
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t n = subsets.masks[j].size();
    const std::size_t n_prev = subsets.masks[j - 1].size();
    cur.assign(n * n * m, 0);
    for (std::size_t rr = 0; rr < n; ++rr) {
      const auto& rows = subsets.lists[j][rr];
      const std::size_t last_row = rows.back();
      const std::uint32_t rest_rows = subsets.masks[j][rr] & ~(std::uint32_t{1} << last_row);
      const std::size_t rest_rank = static_cast<std::size_t>(subsets.rank[rest_rows]);
      for (std::size_t cr = 0; cr < n; ++cr) {
        const auto& cols = subsets.lists[j][cr];
        Coeff* out = &cur[(rr * n + cr) * m];
        if (j == 1) {
          std::copy(entries[last_row * k + cols[0]].begin(), entries[last_row * k + cols[0]].end(), out);
        } else {
          const std::uint32_t col_mask = subsets.masks[j][cr];
          for (std::size_t idx = 0; idx < j; ++idx) {
            const auto& a = entries[last_row * k + cols[idx]];
            const std::uint32_t rest_cols = col_mask & ~(std::uint32_t{1} << cols[idx]);
            const std::size_t sub = rest_rank * n_prev + static_cast<std::size_t>(subsets.rank[rest_cols]);
            std::span<const Coeff> minor(&prev[sub * m], m);
            const auto term = ctx.mul_raw(a, minor);
            const bool negative = ((j - 1) + idx) % 2 == 1;
            for (unsigned t = 0; t < m; ++t) out[t] = negative ? (out[t] + q - term[t]) % q : (out[t] + term[t]) % q;
          }
        }
        if (singular(std::span<const Coeff>(out, m))) {
          MinorWitness w;
          w.rows = rows;
          w.cols = cols;
          return w;
        }
      }
    }
    prev.swap(cur);
  }
  return std::nullopt;
}

std::vector<std::vector<Coeff>> raw_entries(const GRMatrix& a) {
  std::vector<std::vector<Coeff>> out;
  out.reserve(a.entries().size());
  for (const auto& x : a.entries()) out.push_back(x.coeffs());
  return out;
}

}  // namespace

GRMatrix::GRMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_->zero()) {}

GRMatrix::GRMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<RingElement> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) {
    throw Error(ErrorCode::BadParameter, "matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                                             std::to_string(a_.size()));
  }
  for (const auto& x : a_) {
    if (x.ring() != ring_ && !x.ring()->same_ring(*ring_)) throw Error(ErrorCode::MixedRings, "matrix entry");
  }
}

GRMatrix GRMatrix::identity(const Ring& ring, std::size_t k) {
  GRMatrix out(ring, k, k);
  for (std::size_t i = 0; i < k; ++i) out.at(i, i) = ring->one();
  return out;
}

GRMatrix GRMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  GRMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = at(rows.at(r), cols.at(c));
  }
  return out;
}

GRMatrix GRMatrix::projected() const {
  std::vector<RingElement> entries;
  entries.reserve(a_.size());
  for (const auto& x : a_) entries.push_back(project_residue(x));
  return GRMatrix(ring_->residue_field(), rows_, cols_, std::move(entries));
}

std::string GRMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << at(r, c).to_string();
    }
    out << "]";
    if (r + 1 < rows_) out << "\n";
  }
  return out.str();
}

GRMatrix GRMatrix::operator-() const {
  GRMatrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

GRMatrix operator*(const GRMatrix& a, const GRMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DegreeMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                               std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                                               std::to_string(b.cols_));
  }
  if (a.ring_ != b.ring_ && !a.ring_->same_ring(*b.ring_)) throw Error(ErrorCode::MixedRings, "matrix product");
  GRMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const RingElement& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(l, j);
    }
  }
  return out;
}

bool operator==(const GRMatrix& a, const GRMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

GRMatrix companion(const SkewPoly& g) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, g.to_string());
  if (g.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "companion matrix needs degree >= 2");
  const auto k = static_cast<std::size_t>(g.degree());
  GRMatrix c(g.ring(), k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) c.at(i, i + 1) = g.ring()->one();
  for (std::size_t j = 0; j < k; ++j) c.at(k - 1, j) = -g.coeffs()[j];
  return c;
}

GRMatrix sigma_twist(const GRMatrix& a, std::int64_t i) {
  std::vector<RingElement> entries;
  entries.reserve(a.entries().size());
  for (const auto& x : a.entries()) entries.push_back(apply_sigma(x, i));
  return GRMatrix(a.ring(), a.rows(), a.cols(), std::move(entries));
}

GRMatrix twisted_chain(const SkewPoly& g, unsigned t) {
  if (t == 0) throw Error(ErrorCode::BadParameter, "chain length t must be positive");
  const GRMatrix c = companion(g);
  GRMatrix m = c;
  for (unsigned i = 1; i < t; ++i) m = sigma_twist(c, i) * m;
#ifndef NDEBUG
  if (!(m == chain_from_remainders(g, t))) {
    throw Error(ErrorCode::InternalInconsistency, "matrix chain disagrees with right remainders");
  }
#endif
  return m;
}

GRMatrix chain_from_remainders(const SkewPoly& g, unsigned t) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, g.to_string());
  if (g.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "companion matrix needs degree >= 2");
  const auto k = static_cast<std::size_t>(g.degree());
  GRMatrix out(g.ring(), k, k);
  for (std::size_t r = 0; r < k; ++r) {
    const SkewPoly rem =
        right_divmod(SkewPoly::monomial(g.ring()->one(), t + static_cast<unsigned>(r)), g).remainder;
    for (std::size_t c = 0; c < k; ++c) out.at(r, c) = rem.coeff(c);
  }
  return out;
}

RingElement determinant(const GRMatrix& a) {
  require_square(a);
  const std::size_t k = a.rows();
  if (k > kMaxDeterminantOrder) {
    throw Error(ErrorCode::BadParameter, "determinant supports order <= " + std::to_string(kMaxDeterminantOrder));
  }
  if (k == 0) return a.ring()->one();
  // d[mask] = det of rows 0..|mask|-1 restricted to the columns in mask.
  std::vector<RingElement> d(std::size_t{1} << k, a.ring()->zero());
  d[0] = a.ring()->one();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    const auto row = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
    RingElement acc = a.ring()->zero();
    std::size_t idx = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask & (std::uint32_t{1} << c))) continue;
      const RingElement& x = a.at(row, c);
      if (!x.is_zero()) {
        const RingElement term = x * d[mask & ~(std::uint32_t{1} << c)];
        if ((row + idx) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++idx;
    }
    d[mask] = std::move(acc);
  }
  return d.back();
}

VerificationReport is_mds(const GRMatrix& a) {
  require_square(a);
  const auto start = std::chrono::steady_clock::now();
  const GRMatrix residue = a.projected();
  const RingContext& field = *residue.ring();
  auto witness = first_singular_minor(field, raw_entries(residue), a.rows(), [](std::span<const Coeff> v) {
    return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
  });
  VerificationReport report;
  report.mds = !witness.has_value();
  report.witness = std::move(witness);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool all_minors_unit_in_ring(const GRMatrix& a) {
  require_square(a);
  const std::uint64_t p = a.ring()->p();
  auto witness = first_singular_minor(*a.ring(), raw_entries(a), a.rows(), [p](std::span<const Coeff> v) {
    return std::all_of(v.begin(), v.end(), [p](Coeff c) { return c % p == 0; });
  });
  return !witness.has_value();
}

bool check_quasi_involutory(const SkewPoly& g) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, g.to_string());
  if (g.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "companion matrix needs degree >= 2");
  const auto k = static_cast<unsigned>(g.degree());
  if ((2 * k) % g.ring()->sigma_order() != 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "order of sigma (" + std::to_string(g.ring()->sigma_order()) + ") does not divide 2k");
  }
  if (!right_divides(g, x_pow_minus_one(g.ring(), 2 * k))) {
    throw Error(ErrorCode::PreconditionViolated, "g does not right-divide X^{2k} - 1");
  }
  const GRMatrix n = twisted_chain(g, k);
  return sigma_twist(n, k) * n == GRMatrix::identity(g.ring(), k);
}

}  // namespace grmds

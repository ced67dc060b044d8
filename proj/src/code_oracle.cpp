#include "grmds/code_oracle.hpp"

#include <algorithm>

namespace grmds {

namespace {

std::uint64_t ring_size_checked(const Ring& ring, std::size_t k) {
  const auto count = ring->element_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (!count || total > kEnumerationBudget / *count) {
      throw Error(ErrorCode::BudgetExceeded, "|R|^" + std::to_string(k) + " messages exceed 2^24");
    }
    total *= *count;
  }
  return *count;
}

// Smallest weight of a nonzero combination sum u_i rows[i] (u_i in R, acting on the left).
// With count_message, the weight of u itself is added (systematic part of [I | M]).
// Stops early once a weight <= stop_at is seen.
unsigned min_combination_weight(const Ring& ring, const std::vector<std::vector<RingElement>>& rows,
                                bool count_message, unsigned stop_at) {
  const std::size_t k = rows.size();
  const std::size_t len = rows.front().size();
  const unsigned m = ring->m();
  const std::uint64_t q = ring->q();
  const std::uint64_t size = ring_size_checked(ring, k);
  const std::size_t width = len * m;

  // contrib[i][a] = element_at(a) * rows[i], flattened.
  std::vector<std::vector<Coeff>> contrib(k, std::vector<Coeff>(size * width));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint64_t a = 0; a < size; ++a) {
      const RingElement x = ring->element_at(a);
      for (std::size_t c = 0; c < len; ++c) {
        const RingElement y = x * rows[i][c];
        std::copy(y.coeffs().begin(), y.coeffs().end(), contrib[i].begin() + (a * len + c) * m);
      }
    }
  }

  // partial[i] = sum over digits j < i; digit k-1 changes fastest.
  std::vector<std::vector<Coeff>> partial(k + 1, std::vector<Coeff>(width, 0));
  std::vector<std::uint64_t> digit(k, 0);
  unsigned best = static_cast<unsigned>(len + (count_message ? k : 0)) + 1;
  std::size_t dirty = 0;
  while (true) {
    // Advance the odometer; stop after wrapping back to all zeros.
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < size) break;
      digit[pos] = 0;
      if (pos == 0) return best;
    }
    dirty = std::min(dirty, pos);
    for (std::size_t i = dirty; i < k; ++i) {
      const Coeff* add = &contrib[i][digit[i] * width];
      for (std::size_t w = 0; w < width; ++w) partial[i + 1][w] = (partial[i][w] + add[w]) % q;
    }
    dirty = k;
    unsigned weight = 0;
    if (count_message) {
      for (auto d : digit) weight += d != 0;
    }
    const auto& sum = partial[k];
    for (std::size_t c = 0; c < len; ++c) {
      for (unsigned r = 0; r < m; ++r) {
        if (sum[c * m + r] != 0) {
          ++weight;
          break;
        }
      }
    }
    best = std::min(best, weight);
    if (best <= stop_at) return best;
  }
}

void require_monic_degree(const SkewPoly& g) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, g.to_string());
  if (g.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "g must have positive degree");
}

}  // namespace

CodeInstance::CodeInstance(GRMatrix m_in) : m(std::move(m_in)) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "code needs a square block");
  const std::size_t k = m.rows();
  gen = GRMatrix(m.ring(), k, 2 * k);
  for (std::size_t r = 0; r < k; ++r) {
    gen.at(r, r) = m.ring()->one();
    for (std::size_t c = 0; c < k; ++c) gen.at(r, k + c) = m.at(r, c);
  }
}

unsigned min_distance(const CodeInstance& code) {
  const std::size_t k = code.m.rows();
  std::vector<std::vector<RingElement>> rows(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) rows[r].push_back(code.m.at(r, c));
  }
  return min_combination_weight(code.m.ring(), rows, true, 1);
}

bool weight_criterion_full(const SkewPoly& g, unsigned n) {
  require_monic_degree(g);
  const auto k = static_cast<unsigned>(g.degree());
  if (n < 2 * k) throw Error(ErrorCode::BadParameter, "n must be at least 2k");
  if (!right_divides(g, x_pow_minus_one(g.ring(), n))) {
    throw Error(ErrorCode::NotRightDivisor, g.to_string() + " does not right-divide X^" + std::to_string(n) + " - 1");
  }
  // Row i: coefficients of X^i * g, a polynomial of degree < 2k.
  std::vector<std::vector<RingElement>> rows(k);
  for (unsigned i = 0; i < k; ++i) {
    const SkewPoly shifted = smul(SkewPoly::monomial(g.ring()->one(), i), g);
    for (unsigned c = 0; c < 2 * k; ++c) rows[i].push_back(shifted.coeff(c));
  }
  return min_combination_weight(g.ring(), rows, false, k) >= k + 1;
}

bool weight_criterion_support(const SkewPoly& g, unsigned t) {
  require_monic_degree(g);
  const auto k = static_cast<unsigned>(g.degree());
  if (t < k) throw Error(ErrorCode::BadParameter, "t must be at least k");
  // b_r = X^{t+r} - rem_r; the X^{t+r} part contributes wt(u), the remainders the rest.
  std::vector<std::vector<RingElement>> rows(k);
  for (unsigned r = 0; r < k; ++r) {
    const SkewPoly rem = right_divmod(SkewPoly::monomial(g.ring()->one(), t + r), g).remainder;
    for (unsigned c = 0; c < k; ++c) rows[r].push_back(-rem.coeff(c));
  }
  return min_combination_weight(g.ring(), rows, true, k) >= k + 1;
}

}  // namespace grmds

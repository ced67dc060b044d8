#pragma once

#include <string>
#include <vector>

#include "grmds/ring.hpp"

namespace grmds {

/// Element of R[X; sigma], coefficients low-to-high with trailing zeros trimmed.
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(Ring ring, std::vector<RingElement> coeffs = {});

  static SkewPoly constant(const RingElement& a);
  /// a X^i
  static SkewPoly monomial(const RingElement& a, unsigned i);
  /// X - beta
  static SkewPoly x_minus(const RingElement& beta);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<RingElement>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// Coefficient of X^i, zero past the degree.
  RingElement coeff(std::size_t i) const;
  const RingElement& leading() const;

  /// "1 + 2X + X^3"; multi-term coefficients are parenthesised.
  std::string to_string() const;

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

 private:
  void trim();

  Ring ring_;
  std::vector<RingElement> c_;
};

/// Skew product with aX^i * bX^j = a sigma^i(b) X^{i+j}.
SkewPoly smul(const SkewPoly& f, const SkewPoly& g);

struct DivMod {
  SkewPoly quotient;
  SkewPoly remainder;
};

/// f = quotient * g + remainder with deg remainder < deg g. Needs a unit leading coefficient.
DivMod right_divmod(const SkewPoly& f, const SkewPoly& g);

/// beta sigma(beta) ... sigma^{i-1}(beta); N_0 = 1 even for beta = 0.
RingElement sigma_norm(const RingElement& beta, unsigned i);

/// N_0(beta), ..., N_{count-1}(beta) via N_{i+1} = sigma(N_i) beta.
std::vector<RingElement> sigma_norms(const RingElement& beta, unsigned count);

/// sum a_i N_i(beta).
RingElement right_eval(const SkewPoly& f, const RingElement& beta);

/// Remainder of right division by X - beta (reference path for right_eval).
RingElement right_eval_by_division(const SkewPoly& f, const RingElement& beta);

bool is_right_root(const SkewPoly& f, const RingElement& beta);

/// Monic least left common multiple of the X - a_i, built one root at a time.
/// Throws DuplicateRoot when a root is already a right root of the partial
/// product and DependentRoots when the partial evaluation is a nonzero non-unit.
SkewPoly build_w_poly(const std::vector<RingElement>& roots);

bool right_divides(const SkewPoly& g, const SkewPoly& f);

/// Coefficients sigma-fixed and supported on multiples of the order of sigma.
bool is_central(const SkewPoly& f);

/// X^n - 1
SkewPoly x_pow_minus_one(const Ring& ring, unsigned n);

struct RootsOfUnity {
  Ring ring;            // splitting extension
  Embedding embedding;  // base -> ring
  unsigned n = 0;
  std::vector<RingElement> roots;
};

/// Right roots sigma(beta)/beta of X^n - 1, beta ranging over Teichmueller
/// representatives of the cosets of the sigma-fixed units. With sigma = id the
/// quotient is always 1, so the classical n-th roots of unity are returned instead.
RootsOfUnity right_roots_of_unity(const Ring& ring, unsigned n);

}  // namespace grmds

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grmds/error.hpp"

namespace grmds {

using Coeff = std::uint64_t;

class RingContext;

/// Shared, immutable handle to a Galois ring GR(p^s, p^{sm}) together with
/// its chosen automorphism sigma = theta^e.
using Ring = std::shared_ptr<const RingContext>;

/// One element c_0 + c_1 z + ... + c_{m-1} z^{m-1}, coefficients in Z_{p^s}.
class RingElement {
 public:
  RingElement() = default;
  /// Coefficients are reduced modulo p^s; fewer than m entries are zero-padded.
  RingElement(Ring ring, std::vector<Coeff> coeffs);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// Units are exactly the elements with nonzero residue.
  bool is_unit() const;
  /// True for every element of the maximal ideal <p>, zero included.
  bool is_nilpotent() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);
  RingElement pow(std::uint64_t exponent) const;

  std::string to_string() const;

  friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
  friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
  friend RingElement operator*(const RingElement& lhs, const RingElement& rhs);
  friend bool operator==(const RingElement& lhs, const RingElement& rhs);

 private:
  Ring ring_;
  std::vector<Coeff> c_;
};

enum class ArithKind { Add, Sub, Mul, Neg };

/// Dispatching form of the ring operations (Neg ignores y).
RingElement arith(const RingElement& x, const RingElement& y, ArithKind kind);

/// Multiplicative inverse; throws NotAUnit for elements of <p>.
RingElement inverse(const RingElement& x);

/// sigma^i(x) with sigma = theta^e; negative i is taken modulo the order of sigma.
RingElement apply_sigma(const RingElement& x, std::int64_t i = 1);

/// theta^i(x) for the Frobenius theta generating Aut(GR).
RingElement apply_frobenius(const RingElement& x, std::int64_t i = 1);

/// Image in the residue field F_{p^m}, returned as an element of
/// ring()->residue_field() (an s = 1 context over the reduced modulus).
RingElement project_residue(const RingElement& x);

class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  std::uint64_t p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  unsigned m() const noexcept { return m_; }
  /// Characteristic p^s.
  std::uint64_t q() const noexcept { return q_; }
  /// sigma = theta^e.
  unsigned e() const noexcept { return e_; }
  unsigned sigma_order() const noexcept { return sigma_order_; }
  /// Size of the residue field, p^m.
  std::uint64_t residue_size() const noexcept { return residue_size_; }
  /// Number of ring elements p^{sm} when it fits in 62 bits.
  std::optional<std::uint64_t> element_count() const noexcept { return element_count_; }
  /// Monic modulus f(Y), low-to-high, m + 1 coefficients.
  const std::vector<Coeff>& modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return s_ == 1; }

  /// True when the class of Y itself is a Teichmueller element (f is the Hensel lift).
  bool zeta_is_teichmuller() const noexcept { return zeta_teichmuller_; }

  Ring residue_field() const;

  RingElement zero() const;
  RingElement one() const;
  /// Class of Y.
  RingElement zeta() const;
  /// Generator of the Teichmueller group; equals zeta() for Hensel-lifted moduli.
  RingElement teichmuller_generator() const;
  RingElement from_int(std::int64_t value) const;
  /// Signed literal, low-to-high, reduced modulo p^s.
  RingElement element(const std::vector<std::int64_t>& coeffs) const;

  /// Mixed-radix enumeration of all elements (index < element_count()).
  RingElement element_at(std::uint64_t index) const;

  /// Same p, s, m, modulus and automorphism exponent.
  bool same_ring(const RingContext& other) const noexcept;

  std::string description() const;

  // Raw arithmetic on coefficient vectors of length m.
  std::vector<Coeff> mul_raw(std::span<const Coeff> a, std::span<const Coeff> b) const;
  std::vector<Coeff> frobenius_raw(std::span<const Coeff> a, unsigned power) const;

  friend Ring make_ring(std::uint64_t, unsigned, unsigned, std::optional<std::vector<std::int64_t>>,
                        unsigned);

 private:
  RingContext(std::uint64_t p, unsigned s, unsigned m, std::vector<Coeff> modulus, unsigned e);
  void finish();

  std::uint64_t p_;
  unsigned s_;
  unsigned m_;
  std::uint64_t q_;
  unsigned e_;
  unsigned sigma_order_ = 1;
  std::uint64_t residue_size_ = 0;
  std::optional<std::uint64_t> element_count_;
  std::vector<Coeff> modulus_;
  // theta_images_[j][i * m + r] = coefficient r of theta^j(z^i).
  std::vector<std::vector<Coeff>> theta_images_;
  Ring residue_;
  std::vector<Coeff> teichmuller_;
  bool zeta_teichmuller_ = false;
};

/// Builds and validates GR(p^s, p^{sm}) with sigma = theta^e. Without a modulus,
/// the lexicographically smallest monic primitive polynomial over F_p is used
/// (lifted to its Hensel lift over Z_{p^s} when s > 1).
Ring make_ring(std::uint64_t p, unsigned s, unsigned m,
               std::optional<std::vector<std::int64_t>> modulus = std::nullopt, unsigned e = 0);

/// Ring monomorphism GR(p^s, p^{sm}) -> GR(p^s, p^{sN}) for m | N.
class Embedding {
 public:
  Embedding() = default;
  Embedding(Ring base, Ring ext, std::vector<RingElement> zeta_powers);

  const Ring& base() const noexcept { return base_; }
  const Ring& ext() const noexcept { return ext_; }
  /// Image of the base class of Y.
  const RingElement& zeta_image() const { return powers_.at(1 % powers_.size()); }
  bool is_identity() const noexcept { return base_ == ext_; }

  RingElement operator()(const RingElement& x) const;
  /// Base coordinates of an element of the image, nullopt outside it.
  std::optional<RingElement> retract(const RingElement& y) const;

 private:
  Ring base_;
  Ring ext_;
  std::vector<RingElement> powers_;
};

/// Extension of residue degree m * l; l == 1 returns the base ring with the identity map.
std::pair<Ring, Embedding> extend_ring(const Ring& base, unsigned l);

/// True iff theta^m fixes x, i.e. x lies in the copy of GR(p^s, p^{sm}).
bool in_base_subring(const RingElement& x, unsigned m);

}  // namespace grmds

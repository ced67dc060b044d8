#include "grmds/ring.hpp"

#include <algorithm>
#include <sstream>

#include "grmds/numtheory.hpp"

namespace grmds {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 24;
constexpr unsigned kMaxDegree = 64;

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!a.ring() || !b.ring()) throw Error(ErrorCode::MixedRings, "element without a ring");
  if (a.ring() != b.ring() && !a.ring()->same_ring(*b.ring())) {
    throw Error(ErrorCode::MixedRings,
                a.ring()->description() + " vs " + b.ring()->description());
  }
}

Coeff reduce_signed(std::int64_t v, std::uint64_t q) {
  auto r = v % static_cast<std::int64_t>(q);
  if (r < 0) r += static_cast<std::int64_t>(q);
  return static_cast<Coeff>(r);
}

// Inverse of a unit of Z_q via extended Euclid.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(a % q);
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quotient * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quotient * new_r);
  }
  if (r != 1) throw Error(ErrorCode::NotAUnit, std::to_string(a) + " mod " + std::to_string(q));
  return reduce_signed(t, q);
}

RingElement eval_integer_poly(const std::vector<Coeff>& poly, const RingElement& x) {
  RingElement acc = x.ring()->zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc *= x;
    acc += x.ring()->from_int(static_cast<std::int64_t>(*it));
  }
  return acc;
}

RingElement eval_integer_poly_derivative(const std::vector<Coeff>& poly, const RingElement& x) {
  RingElement acc = x.ring()->zero();
  for (std::size_t i = poly.size(); i-- > 1;) {
    acc *= x;
    acc += x.ring()->from_int(static_cast<std::int64_t>(poly[i] * i % x.ring()->q()));
  }
  return acc;
}

// Hensel/Newton lift of an approximate root (f(r0) in <p>) to the exact root of f.
RingElement newton_root(const std::vector<Coeff>& poly, RingElement root) {
  for (int iter = 0; iter < 64; ++iter) {
    RingElement value = eval_integer_poly(poly, root);
    if (value.is_zero()) return root;
    root -= value * inverse(eval_integer_poly_derivative(poly, root));
  }
  throw Error(ErrorCode::InternalInconsistency, "Newton lift did not converge");
}

bool residue_is_primitive(std::uint64_t p, unsigned m, const std::vector<Coeff>& fbar,
                          const RingContext& scratch) {
  if (fbar[0] % p == 0) return false;
  const std::uint64_t order = *nt::checked_pow(p, m) - 1;
  std::vector<Coeff> y(m, 0);
  if (m == 1) {
    y[0] = (p - fbar[0] % p) % p;
  } else {
    y[1] = 1;
  }
  auto power = [&](std::uint64_t exponent) {
    std::vector<Coeff> result(m, 0);
    result[0] = 1;
    std::vector<Coeff> base = y;
    while (exponent) {
      if (exponent & 1) result = scratch.mul_raw(result, base);
      base = scratch.mul_raw(base, base);
      exponent >>= 1;
    }
    return result;
  };
  std::vector<Coeff> one(m, 0);
  one[0] = 1;
  if (power(order) != one) return false;
  for (std::uint64_t prime : nt::prime_factors(order)) {
    if (power(order / prime) == one) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(Ring ring, std::vector<Coeff> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (!ring_) throw Error(ErrorCode::BadParameter, "element needs a ring");
  if (c_.size() > ring_->m()) {
    throw Error(ErrorCode::BadParameter, "element literal has " + std::to_string(c_.size()) +
                                             " coefficients, ring degree is " + std::to_string(ring_->m()));
  }
  c_.resize(ring_->m(), 0);
  for (auto& c : c_) c %= ring_->q();
}

bool RingElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coeff c) { return c == 0; });
}

bool RingElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Coeff c) { return c == 0; });
}

bool RingElement::is_unit() const { return !is_nilpotent(); }

bool RingElement::is_nilpotent() const {
  const auto p = ring_->p();
  return std::all_of(c_.begin(), c_.end(), [p](Coeff c) { return c % p == 0; });
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& c : out.c_) c = (ring_->q() - c) % ring_->q();
  return out;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  require_same_ring(*this, rhs);
  const auto q = ring_->q();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + rhs.c_[i]) % q;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  require_same_ring(*this, rhs);
  const auto q = ring_->q();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + q - rhs.c_[i]) % q;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
  require_same_ring(*this, rhs);
  c_ = ring_->mul_raw(c_, rhs.c_);
  return *this;
}

RingElement operator*(const RingElement& lhs, const RingElement& rhs) {
  RingElement out = lhs;
  out *= rhs;
  return out;
}

bool operator==(const RingElement& lhs, const RingElement& rhs) {
  if (lhs.ring_ != rhs.ring_) {
    if (!lhs.ring_ || !rhs.ring_ || !lhs.ring_->same_ring(*rhs.ring_)) return false;
  }
  return lhs.c_ == rhs.c_;
}

RingElement RingElement::pow(std::uint64_t exponent) const {
  RingElement result = ring_->one();
  RingElement base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string RingElement::to_string() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c_[i];
      continue;
    }
    if (c_[i] != 1) out << c_[i];
    out << "z";
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

RingElement arith(const RingElement& x, const RingElement& y, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return x + y;
    case ArithKind::Sub: return x - y;
    case ArithKind::Mul: return x * y;
    case ArithKind::Neg: return -x;
  }
  return x;
}

RingElement inverse(const RingElement& x) {
  if (!x.is_unit()) throw Error(ErrorCode::NotAUnit, x.to_string() + " lies in <p>");
  const auto& ring = *x.ring();
  // x^(p^m - 2) inverts the residue; Newton steps y <- y(2 - xy) lift it to p^s.
  RingElement y = x.pow(ring.residue_size() - 2);
  const RingElement two = ring.from_int(2);
  for (unsigned iter = 0; iter < 64; ++iter) {
    RingElement check = x * y;
    if (check.is_one()) return y;
    y = y * (two - check);
  }
  throw Error(ErrorCode::InternalInconsistency, "inverse lift did not converge");
}

RingElement apply_frobenius(const RingElement& x, std::int64_t i) {
  const auto m = static_cast<std::int64_t>(x.ring()->m());
  auto power = static_cast<unsigned>(((i % m) + m) % m);
  return RingElement(x.ring(), x.ring()->frobenius_raw(x.coeffs(), power));
}

RingElement apply_sigma(const RingElement& x, std::int64_t i) {
  const auto& ring = *x.ring();
  const auto order = static_cast<std::int64_t>(ring.sigma_order());
  const std::int64_t reduced = ((i % order) + order) % order;
  return apply_frobenius(x, reduced * static_cast<std::int64_t>(ring.e()));
}

RingElement project_residue(const RingElement& x) {
  Ring residue = x.ring()->residue_field();
  std::vector<Coeff> coeffs = x.coeffs();
  for (auto& c : coeffs) c %= x.ring()->p();
  return RingElement(std::move(residue), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// RingContext

RingContext::RingContext(std::uint64_t p, unsigned s, unsigned m, std::vector<Coeff> modulus, unsigned e)
    : p_(p), s_(s), m_(m), q_(*nt::checked_pow(p, s)), e_(e), modulus_(std::move(modulus)) {}

std::vector<Coeff> RingContext::mul_raw(std::span<const Coeff> a, std::span<const Coeff> b) const {
  // q < 2^24 keeps every partial sum below 2^55 for m <= 64.
  std::vector<std::uint64_t> tmp(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) tmp[i + j] += a[i] * b[j];
  }
  for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
    const std::uint64_t lead = tmp[d] % q_;
    if (lead != 0) {
      for (unsigned i = 0; i < m_; ++i) {
        tmp[d - m_ + i] += lead * ((q_ - modulus_[i]) % q_);
      }
    }
  }
  std::vector<Coeff> out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = tmp[i] % q_;
  return out;
}

std::vector<Coeff> RingContext::frobenius_raw(std::span<const Coeff> a, unsigned power) const {
  const auto& images = theta_images_.at(power % m_);
  std::vector<std::uint64_t> acc(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned r = 0; r < m_; ++r) acc[r] = (acc[r] + a[i] * images[i * m_ + r]) % q_;
  }
  return acc;
}

void RingContext::finish() {
  sigma_order_ = e_ == 0 ? 1 : m_ / static_cast<unsigned>(nt::gcd(m_, e_));
  residue_size_ = *nt::checked_pow(p_, m_);
  element_count_ = nt::checked_pow(q_, m_);

  // theta(z) is the root of f congruent to z^p; it equals z^p exactly when f is a Hensel lift.
  theta_images_.assign(1, std::vector<Coeff>(m_ * m_, 0));
  for (unsigned i = 0; i < m_; ++i) theta_images_[0][i * m_ + i] = 1;
  if (m_ > 1) {
    const RingElement root = newton_root(modulus_, zeta().pow(p_));
    // theta^j(z) = theta(theta^{j-1}(z)); theta^j(z^i) = theta^j(z)^i.
    std::vector<Coeff> theta1(m_ * m_, 0);
    {
      RingElement power = one();
      for (unsigned i = 0; i < m_; ++i) {
        std::copy(power.coeffs().begin(), power.coeffs().end(), theta1.begin() + i * m_);
        power *= root;
      }
    }
    theta_images_.push_back(theta1);
    RingElement current = root;
    for (unsigned j = 2; j < m_; ++j) {
      current = RingElement(shared_from_this(), frobenius_raw(current.coeffs(), 1));
      std::vector<Coeff> images(m_ * m_, 0);
      RingElement power = one();
      for (unsigned i = 0; i < m_; ++i) {
        std::copy(power.coeffs().begin(), power.coeffs().end(), images.begin() + i * m_);
        power *= current;
      }
      theta_images_.push_back(std::move(images));
    }
  }

  RingElement teich = zeta();
  if (m_ == 1) teich = RingElement(shared_from_this(), {(q_ - modulus_[0]) % q_});
  for (unsigned i = 1; i < s_; ++i) teich = teich.pow(residue_size_);
  teichmuller_ = teich.coeffs();
  zeta_teichmuller_ = teich == zeta();

  if (s_ > 1) {
    std::vector<std::int64_t> reduced(modulus_.size());
    for (std::size_t i = 0; i < modulus_.size(); ++i) reduced[i] = static_cast<std::int64_t>(modulus_[i] % p_);
    residue_ = make_ring(p_, 1, m_, reduced, e_);
  }
}

Ring RingContext::residue_field() const {
  if (s_ == 1) return shared_from_this();
  return residue_;
}

RingElement RingContext::zero() const { return RingElement(shared_from_this(), {}); }

RingElement RingContext::one() const { return from_int(1); }

RingElement RingContext::zeta() const {
  if (m_ == 1) {
    // Degree one: the class of Y is the root -f_0.
    return RingElement(shared_from_this(), {(q_ - modulus_[0]) % q_});
  }
  std::vector<Coeff> c(m_, 0);
  c[1] = 1;
  return RingElement(shared_from_this(), std::move(c));
}

RingElement RingContext::teichmuller_generator() const { return RingElement(shared_from_this(), teichmuller_); }

RingElement RingContext::from_int(std::int64_t value) const {
  std::vector<Coeff> c(m_, 0);
  c[0] = reduce_signed(value, q_);
  return RingElement(shared_from_this(), std::move(c));
}

RingElement RingContext::element(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() > m_) {
    throw Error(ErrorCode::ParseError, "element literal longer than ring degree " + std::to_string(m_));
  }
  std::vector<Coeff> c(m_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = reduce_signed(coeffs[i], q_);
  return RingElement(shared_from_this(), std::move(c));
}

RingElement RingContext::element_at(std::uint64_t index) const {
  std::vector<Coeff> c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = index % q_;
    index /= q_;
  }
  return RingElement(shared_from_this(), std::move(c));
}

bool RingContext::same_ring(const RingContext& other) const noexcept {
  return p_ == other.p_ && s_ == other.s_ && m_ == other.m_ && e_ == other.e_ && modulus_ == other.modulus_;
}

std::string RingContext::description() const {
  std::ostringstream out;
  out << "GR(" << p_ << "^" << s_ << ", " << p_ << "^" << s_ * m_ << ") sigma=theta^" << e_;
  return out.str();
}

Ring make_ring(std::uint64_t p, unsigned s, unsigned m, std::optional<std::vector<std::int64_t>> modulus,
               unsigned e) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0 || m == 0) throw Error(ErrorCode::BadParameter, "s and m must be positive");
  if (m > kMaxDegree) throw Error(ErrorCode::BadParameter, "residue degree above " + std::to_string(kMaxDegree));
  if (e >= m) {
    throw Error(ErrorCode::BadAutomorphismExponent,
                "sigma exponent " + std::to_string(e) + " must lie in [0, " + std::to_string(m) + ")");
  }
  auto q = nt::checked_pow(p, s, kMaxCharacteristic);
  if (!q) throw Error(ErrorCode::BadParameter, "characteristic p^s must stay below 2^24");
  if (!nt::checked_pow(p, m)) throw Error(ErrorCode::BadParameter, "p^m must stay below 2^62");

  auto scratch_for = [&](unsigned s_scratch, std::vector<Coeff> f) {
    return std::shared_ptr<RingContext>(new RingContext(p, s_scratch, m, std::move(f), 0));
  };

  std::vector<Coeff> f;
  if (modulus) {
    if (modulus->size() != m + 1) {
      throw Error(ErrorCode::ModulusNotBasicPrimitive,
                  "modulus must have " + std::to_string(m + 1) + " coefficients (monic, degree m)");
    }
    for (auto c : *modulus) f.push_back(reduce_signed(c, *q));
    if (f.back() != 1) throw Error(ErrorCode::ModulusNotBasicPrimitive, "modulus is not monic");
    std::vector<Coeff> fbar(f);
    for (auto& c : fbar) c %= p;
    if (!residue_is_primitive(p, m, fbar, *scratch_for(1, fbar))) {
      throw Error(ErrorCode::ModulusNotBasicPrimitive, "reduction mod p is not primitive irreducible");
    }
  } else {
    // Lexicographic order on (f_0, f_1, ..., f_{m-1}): f_0 is the most significant digit.
    std::vector<Coeff> fbar(m + 1, 0);
    fbar[m] = 1;
    fbar[0] = 1;
    while (true) {
      if (residue_is_primitive(p, m, fbar, *scratch_for(1, fbar))) break;
      int pos = static_cast<int>(m) - 1;
      while (pos >= 0) {
        if (++fbar[pos] < p) break;
        fbar[pos] = 0;
        --pos;
      }
      if (pos < 0) throw Error(ErrorCode::InternalInconsistency, "no primitive polynomial found");
    }
    f = fbar;
    if (s > 1) {
      // Replace the naive lift by the Hensel lift prod (Y - tau^{p^i}) so that z is Teichmueller.
      auto naive = scratch_for(s, f);
      naive->finish();
      const RingElement tau = naive->teichmuller_generator();
      std::vector<RingElement> poly{naive->one()};
      RingElement conj = tau;
      for (unsigned i = 0; i < m; ++i) {
        std::vector<RingElement> next(poly.size() + 1, naive->zero());
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j + 1] += poly[j];
          next[j] -= poly[j] * conj;
        }
        poly = std::move(next);
        conj = conj.pow(p);
      }
      for (unsigned i = 0; i <= m; ++i) {
        const auto& c = poly[i].coeffs();
        if (std::any_of(c.begin() + 1, c.end(), [](Coeff v) { return v != 0; })) {
          throw Error(ErrorCode::InternalInconsistency, "Hensel lift left Z_{p^s}");
        }
        f[i] = c[0];
      }
    }
  }

  auto ctx = std::shared_ptr<RingContext>(new RingContext(p, s, m, std::move(f), e));
  ctx->finish();
  return ctx;
}

// ---------------------------------------------------------------------------
// Embeddings

Embedding::Embedding(Ring base, Ring ext, std::vector<RingElement> zeta_powers)
    : base_(std::move(base)), ext_(std::move(ext)), powers_(std::move(zeta_powers)) {}

RingElement Embedding::operator()(const RingElement& x) const {
  if (x.ring() != base_ && !x.ring()->same_ring(*base_)) {
    throw Error(ErrorCode::MixedRings, "embedding expects an element of " + base_->description());
  }
  if (is_identity()) return x;
  RingElement out = ext_->zero();
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (x.coeffs()[i] != 0) out += ext_->from_int(static_cast<std::int64_t>(x.coeffs()[i])) * powers_[i];
  }
  return out;
}

std::optional<RingElement> Embedding::retract(const RingElement& y) const {
  if (is_identity()) return y;
  const unsigned m = base_->m();
  const unsigned n = ext_->m();
  const std::uint64_t q = base_->q();
  const std::uint64_t p = base_->p();
  // Augmented n x (m + 1) system: columns are images of z^i, right side is y.
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(m + 1));
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned i = 0; i < m; ++i) a[r][i] = powers_[i].coeffs()[r];
    a[r][m] = y.coeffs()[r];
  }
  unsigned row = 0;
  for (unsigned col = 0; col < m; ++col, ++row) {
    unsigned pivot = row;
    while (pivot < n && a[pivot][col] % p == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[row], a[pivot]);
    const std::uint64_t scale = inv_mod(a[row][col], q);
    for (auto& v : a[row]) v = nt::mulmod(v, scale, q);
    for (unsigned r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col];
      for (unsigned c = 0; c <= m; ++c) a[r][c] = (a[r][c] + q - nt::mulmod(factor, a[row][c], q)) % q;
    }
  }
  for (unsigned r = m; r < n; ++r) {
    if (a[r][m] != 0) return std::nullopt;
  }
  std::vector<Coeff> coords(m);
  for (unsigned i = 0; i < m; ++i) coords[i] = a[i][m];
  RingElement x(base_, std::move(coords));
  if (!((*this)(x) == y)) return std::nullopt;
  return x;
}

std::pair<Ring, Embedding> extend_ring(const Ring& base, unsigned l) {
  if (l == 0) throw Error(ErrorCode::BadParameter, "extension degree must be positive");
  if (l == 1) {
    std::vector<RingElement> powers{base->one()};
    RingElement z = base->zeta();
    RingElement pw = z;
    for (unsigned i = 1; i < base->m(); ++i, pw *= z) powers.push_back(pw);
    return {base, Embedding(base, base, std::move(powers))};
  }
  const unsigned big = base->m() * l;
  Ring ext = make_ring(base->p(), base->s(), big, std::nullopt, base->e());
  const std::uint64_t small_order = base->residue_size() - 1;
  const std::uint64_t cofactor = (ext->residue_size() - 1) / small_order;
  const RingElement omega = ext->teichmuller_generator().pow(cofactor);
  // The base modulus splits over F_{p^N}; pick its root omega^j with the least exponent j.
  std::optional<RingElement> root;
  for (std::uint64_t j = 1; j <= small_order; ++j) {
    if (nt::gcd(j, small_order) != 1) continue;
    RingElement candidate = omega.pow(j);
    if (eval_integer_poly(base->modulus(), candidate).is_nilpotent()) {
      root = newton_root(base->modulus(), candidate);
      break;
    }
  }
  if (!root) throw Error(ErrorCode::InternalInconsistency, "base modulus has no root in the extension");
  std::vector<RingElement> powers{ext->one()};
  RingElement pw = *root;
  for (unsigned i = 1; i < base->m(); ++i, pw *= *root) powers.push_back(pw);
  return {ext, Embedding(base, ext, std::move(powers))};
}

bool in_base_subring(const RingElement& x, unsigned m) {
  if (m == 0 || x.ring()->m() % m != 0) {
    throw Error(ErrorCode::DegreeMismatch,
                std::to_string(m) + " does not divide " + std::to_string(x.ring()->m()));
  }
  return apply_frobenius(x, m) == x;
}

}  // namespace grmds

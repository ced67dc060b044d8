#include "grmds/skew_poly.hpp"

#include <algorithm>
#include <sstream>

#include "grmds/numtheory.hpp"

namespace grmds {

namespace {

constexpr std::uint64_t kMaxRootCount = std::uint64_t{1} << 20;

void require_ring(const Ring& a, const Ring& b) {
  if (a != b && !a->same_ring(*b)) {
    throw Error(ErrorCode::MixedRings, a->description() + " vs " + b->description());
  }
}

bool is_constant_element(const RingElement& a) {
  const auto& c = a.coeffs();
  return std::all_of(c.begin() + 1, c.end(), [](Coeff v) { return v == 0; });
}

}  // namespace

SkewPoly::SkewPoly(Ring ring, std::vector<RingElement> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (!ring_) throw Error(ErrorCode::BadParameter, "polynomial needs a ring");
  for (const auto& a : c_) require_ring(ring_, a.ring());
  trim();
}

SkewPoly SkewPoly::constant(const RingElement& a) { return SkewPoly(a.ring(), {a}); }

SkewPoly SkewPoly::monomial(const RingElement& a, unsigned i) {
  std::vector<RingElement> c(i + 1, a.ring()->zero());
  c[i] = a;
  return SkewPoly(a.ring(), std::move(c));
}

SkewPoly SkewPoly::x_minus(const RingElement& beta) {
  return SkewPoly(beta.ring(), {-beta, beta.ring()->one()});
}

void SkewPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RingElement SkewPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }

const RingElement& SkewPoly::leading() const {
  if (c_.empty()) throw Error(ErrorCode::DivisionByZero, "zero polynomial has no leading coefficient");
  return c_.back();
}

std::string SkewPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool plain = is_constant_element(c_[i]);
    if (i == 0) {
      out << c_[i].to_string();
      continue;
    }
    if (!c_[i].is_one()) out << (plain ? c_[i].to_string() : "(" + c_[i].to_string() + ")");
    out << "X";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

SkewPoly SkewPoly::operator-() const {
  std::vector<RingElement> c;
  c.reserve(c_.size());
  for (const auto& a : c_) c.push_back(-a);
  return SkewPoly(ring_, std::move(c));
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  require_ring(a.ring_, b.ring_);
  std::vector<RingElement> c;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return SkewPoly(a.ring_, std::move(c));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  if (a.ring_ != b.ring_ && !a.ring_->same_ring(*b.ring_)) return false;
  return a.c_ == b.c_;
}

SkewPoly smul(const SkewPoly& f, const SkewPoly& g) {
  require_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return SkewPoly(f.ring());
  const auto& ring = f.ring();
  std::vector<RingElement> out(f.coeffs().size() + g.coeffs().size() - 1, ring->zero());
  std::vector<RingElement> twisted = g.coeffs();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) {
      for (auto& b : twisted) b = apply_sigma(b, 1);
    }
    const RingElement& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < twisted.size(); ++j) out[i + j] += a * twisted[j];
  }
  return SkewPoly(ring, std::move(out));
}

DivMod right_divmod(const SkewPoly& f, const SkewPoly& g) {
  require_ring(f.ring(), g.ring());
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "right division by the zero polynomial");
  if (!g.leading().is_unit()) {
    throw Error(ErrorCode::NonUnitLeadingCoefficient, "leading coefficient " + g.leading().to_string());
  }
  const auto& ring = f.ring();
  const int dg = g.degree();
  const RingElement lead_inv = inverse(g.leading());
  std::vector<RingElement> rem = f.coeffs();
  std::vector<RingElement> quot(std::max(0, f.degree() - dg + 1), ring->zero());
  for (int top = f.degree(); top >= dg; --top) {
    const RingElement& r_top = rem[top];
    if (r_top.is_zero()) continue;
    const int d = top - dg;
    const RingElement a = r_top * apply_sigma(lead_inv, d);
    quot[d] = a;
    for (int j = 0; j <= dg; ++j) rem[d + j] -= a * apply_sigma(g.coeffs()[j], d);
    rem[top] = ring->zero();
  }
  return {SkewPoly(ring, std::move(quot)), SkewPoly(ring, std::move(rem))};
}

RingElement sigma_norm(const RingElement& beta, unsigned i) {
  RingElement norm = beta.ring()->one();
  for (unsigned j = 0; j < i; ++j) norm = apply_sigma(norm, 1) * beta;
  return norm;
}

std::vector<RingElement> sigma_norms(const RingElement& beta, unsigned count) {
  std::vector<RingElement> out;
  out.reserve(count);
  RingElement norm = beta.ring()->one();
  for (unsigned j = 0; j < count; ++j) {
    out.push_back(norm);
    norm = apply_sigma(norm, 1) * beta;
  }
  return out;
}

RingElement right_eval(const SkewPoly& f, const RingElement& beta) {
  require_ring(f.ring(), beta.ring());
  RingElement acc = beta.ring()->zero();
  RingElement norm = beta.ring()->one();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) norm = apply_sigma(norm, 1) * beta;
    acc += f.coeffs()[i] * norm;
  }
  return acc;
}

RingElement right_eval_by_division(const SkewPoly& f, const RingElement& beta) {
  return right_divmod(f, SkewPoly::x_minus(beta)).remainder.coeff(0);
}

bool is_right_root(const SkewPoly& f, const RingElement& beta) { return right_eval(f, beta).is_zero(); }

SkewPoly build_w_poly(const std::vector<RingElement>& roots) {
  if (roots.empty()) throw Error(ErrorCode::BadParameter, "build_w_poly needs at least one root");
  const Ring& ring = roots.front().ring();
  SkewPoly g = SkewPoly::x_minus(roots.front());
  for (std::size_t i = 1; i < roots.size(); ++i) {
    require_ring(ring, roots[i].ring());
    const RingElement c = right_eval(g, roots[i]);
    if (c.is_zero()) {
      throw Error(ErrorCode::DuplicateRoot, "root #" + std::to_string(i) + " is already a right root");
    }
    if (!c.is_unit()) {
      throw Error(ErrorCode::DependentRoots,
                  "evaluation at root #" + std::to_string(i) + " is a nonzero non-unit " + c.to_string());
    }
    const RingElement conjugate = apply_sigma(c, 1) * roots[i] * inverse(c);
    g = smul(SkewPoly::x_minus(conjugate), g);
  }
  return g;
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) { return right_divmod(f, g).remainder.is_zero(); }

bool is_central(const SkewPoly& f) {
  const unsigned order = f.ring()->sigma_order();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const RingElement& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    if (i % order != 0 || !(apply_sigma(a, 1) == a)) return false;
  }
  return true;
}

SkewPoly x_pow_minus_one(const Ring& ring, unsigned n) {
  std::vector<RingElement> c(n + 1, ring->zero());
  c[0] = ring->from_int(-1);
  c[n] = c[n] + ring->one();
  return SkewPoly(ring, std::move(c));
}

RootsOfUnity right_roots_of_unity(const Ring& ring, unsigned n) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "n must be positive");
  if (nt::gcd(n, ring->p()) != 1) {
    throw Error(ErrorCode::CharacteristicDividesLength,
                "p = " + std::to_string(ring->p()) + " divides n = " + std::to_string(n));
  }
  const std::uint64_t p = ring->p();
  const unsigned m = ring->m();
  const unsigned e = ring->e();
  // sigma = id: sigma(beta)/beta is always 1, so fall back to the Teichmueller n-th roots.
  const std::uint64_t span = e == 0 ? nt::multiplicative_order(p % n, n) : std::uint64_t{e} * n;
  const std::uint64_t degree = nt::lcm(m, span);
  if (degree > 64 || !nt::checked_pow(p, static_cast<unsigned>(degree))) {
    throw Error(ErrorCode::BudgetExceeded, "splitting ring of residue degree " + std::to_string(degree) +
                                               " is too large");
  }
  auto [ext, embedding] = extend_ring(ring, static_cast<unsigned>(degree / m));
  const std::uint64_t group = ext->residue_size() - 1;
  const RingElement tau = ext->teichmuller_generator();
  const SkewPoly target = x_pow_minus_one(ext, n);

  RootsOfUnity out{ext, embedding, n, {}};
  if (e == 0) {
    const RingElement w = tau.pow(group / n);
    RingElement root = ext->one();
    for (unsigned i = 0; i < n; ++i, root *= w) out.roots.push_back(root);
  } else {
    const std::uint64_t q0 = *nt::checked_pow(p, e);
    const std::uint64_t fixed_sub = *nt::checked_pow(q0, n) - 1;  // order of the theta^{en}-fixed units
    const std::uint64_t cosets = fixed_sub / (q0 - 1);
    if (cosets > kMaxRootCount) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(cosets) + " right roots requested");
    }
    const RingElement step = tau.pow(group / fixed_sub);
    RingElement beta = ext->one();
    for (std::uint64_t j = 0; j < cosets; ++j, beta *= step) {
      out.roots.push_back(apply_sigma(beta, 1) * inverse(beta));
    }
  }
  for (const auto& gamma : out.roots) {
    if (!is_right_root(target, gamma)) {
      throw Error(ErrorCode::InternalInconsistency, gamma.to_string() + " is not a right root of X^n - 1");
    }
  }
  return out;
}

}  // namespace grmds

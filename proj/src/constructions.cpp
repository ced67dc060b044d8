#include "grmds/constructions.hpp"

#include <algorithm>
#include <set>

#include "grmds/numtheory.hpp"
#include "grmds/vandermonde.hpp"

namespace grmds {

namespace {

constexpr unsigned kMaxWorkingDegree = 64;

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::consecutive_powers, "consecutive_powers"},
    {Family::scaled_consecutive, "scaled_consecutive"},
    {Family::root_perturbed, "root_perturbed"},
    {Family::gap_at_k, "gap_at_k"},
    {Family::inverse_gap, "inverse_gap"},
    {Family::gap_k_plus_1, "gap_k_plus_1"},
    {Family::frobenius_orbit, "frobenius_orbit"},
    {Family::frobenius_orbit_with_one, "frobenius_orbit_with_one"},
    {Family::coeff_perturbed, "coeff_perturbed"},
    {Family::from_poly, "from_poly"},
};

void validate_shape(const ConstructionSpec& spec) {
  if (!spec.ring) throw Error(ErrorCode::BadParameter, "construction needs a ring");
  if (spec.k < 2) throw Error(ErrorCode::DegreeTooSmall, "k must be at least 2");
  if (spec.chain_length() < spec.k) {
    throw Error(ErrorCode::BadParameter, "t = " + std::to_string(spec.chain_length()) + " is below k = " +
                                             std::to_string(spec.k));
  }
}

RingElement reduce_literal(const Ring& ring, const Literal& literal) { return ring->element(literal); }

std::vector<RingElement> nilpotent_literals(const Ring& ring, const std::vector<Literal>& eta, std::size_t count) {
  if (eta.size() != count) {
    throw Error(ErrorCode::BadParameter,
                "expected " + std::to_string(count) + " eta entries, got " + std::to_string(eta.size()));
  }
  std::vector<RingElement> out;
  for (const auto& literal : eta) {
    RingElement x = reduce_literal(ring, literal);
    if (!x.is_nilpotent()) throw Error(ErrorCode::NotNilpotent, x.to_string() + " is a unit");
    out.push_back(std::move(x));
  }
  return out;
}

std::uint64_t reduce_exponent(std::int64_t v, std::uint64_t mod) {
  auto r = v % static_cast<std::int64_t>(mod);
  if (r < 0) r += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(r);
}

struct Working {
  Ring ring;
  Embedding embedding;
  RingElement xi;
  std::uint64_t order;  // p^N - 1
};

Working working_ring(const Ring& base, unsigned k, unsigned t, std::uint64_t xi_exponent) {
  auto [ring, embedding] = extend_ring(base, working_extension_degree(base, k, t, xi_exponent));
  const std::uint64_t order = ring->residue_size() - 1;
  RingElement xi = ring->teichmuller_generator().pow(xi_exponent % order);
  return {ring, embedding, xi, order};
}

bool all_distinct(const std::vector<RingElement>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[i] == xs[j]) return false;
    }
  }
  return true;
}

ConstructionResult guaranteed(ConstructionResult result, const char* family) {
  if (!result.report.mds) {
    throw Error(ErrorCode::InternalInconsistency,
                std::string(family) + " produced a non-MDS chain for g = " + result.g.to_string());
  }
  return result;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == f) return entry.name;
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  std::string normalized = name;
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (const auto& entry : kFamilyNames) {
    if (normalized == entry.name) return entry.family;
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
}

unsigned working_extension_degree(const Ring& base, unsigned k, unsigned t, std::uint64_t xi_exponent) {
  const std::uint64_t p = base->p();
  const auto exponents = ExponentSet::support(k, t).entries();
  for (unsigned l = 1; base->m() * l <= kMaxWorkingDegree; ++l) {
    const unsigned n = base->m() * l;
    const auto size = nt::checked_pow(p, n);
    if (!size) break;
    const std::uint64_t order = *size - 1;
    const std::uint64_t step = *nt::checked_pow(p, base->e()) % order;
    const std::uint64_t u = xi_exponent % order;
    // Residue exponent of N_i(tau^u) is u * (1 + p^e + ... + p^{e(i-1)}).
    std::set<std::uint64_t> norms;
    std::uint64_t s_i = 0;
    std::size_t next = 0;
    for (unsigned i = 0; i <= exponents.back(); ++i) {
      if (i == exponents[next]) {
        norms.insert(nt::mulmod(u, s_i, order));
        ++next;
      }
      s_i = (nt::mulmod(s_i, step, order) + 1) % order;
    }
    std::set<std::uint64_t> powers;
    for (unsigned j = 0; j <= k + 1; ++j) powers.insert(nt::mulmod(u, j, order));
    if (norms.size() == exponents.size() && powers.size() == k + 2) return l;
  }
  throw Error(ErrorCode::BudgetExceeded, "no extension up to residue degree " + std::to_string(kMaxWorkingDegree) +
                                             " separates the norms");
}

ConstructionResult finish_result(Ring ring, Embedding embedding, SkewPoly g, std::vector<RingElement> roots,
                                 unsigned t, bool check_involutory) {
  ConstructionResult result;
  result.m = twisted_chain(g, t);
  result.report = is_mds(result.m);
  if (check_involutory) result.report.quasi_involutory = check_quasi_involutory(g);
  const unsigned base_m = embedding.base() ? embedding.base()->m() : ring->m();
  for (const auto& c : g.coeffs()) {
    result.coeffs_in_base.push_back(embedding.is_identity() || in_base_subring(c, base_m));
  }
  result.ring = std::move(ring);
  result.embedding = std::move(embedding);
  result.g = std::move(g);
  result.roots = std::move(roots);
  result.t = t;
  return result;
}

ConstructionResult consecutive_powers(const ConstructionSpec& spec) {
  validate_shape(spec);
  if (spec.family != Family::consecutive_powers && spec.family != Family::scaled_consecutive &&
      spec.family != Family::root_perturbed) {
    throw Error(ErrorCode::BadParameter, "consecutive_powers cannot build " + family_name(spec.family));
  }
  const unsigned t = spec.chain_length();
  Working w = working_ring(spec.ring, spec.k, t, spec.xi_exponent);
  RingElement c = w.ring->one();
  if (spec.c) {
    const RingElement base_c = reduce_literal(spec.ring, *spec.c);
    if (!base_c.is_unit()) throw Error(ErrorCode::NotAUnit, "scale c = " + base_c.to_string());
    c = w.embedding(base_c);
  }
  std::vector<RingElement> roots;
  const std::uint64_t first = reduce_exponent(spec.b, w.order);
  for (unsigned j = 0; j < spec.k; ++j) roots.push_back(c * w.xi.pow((first + j) % w.order));
  if (spec.family == Family::root_perturbed) {
    const auto eta = nilpotent_literals(spec.ring, spec.eta, spec.k);
    for (unsigned j = 0; j < spec.k; ++j) roots[j] += w.embedding(eta[j]);
    if (!all_distinct(roots)) throw Error(ErrorCode::DuplicateRoot, "perturbed roots coincide");
  }
  SkewPoly g = build_w_poly(roots);
  ConstructionResult result =
      finish_result(w.ring, w.embedding, std::move(g), std::move(roots), t, spec.check_involutory);
  result.xi = w.xi;
  return guaranteed(std::move(result), "consecutive-power construction");
}

ConstructionResult perturb_roots(const ConstructionSpec& spec) {
  if (spec.family != Family::root_perturbed) {
    throw Error(ErrorCode::BadParameter, "perturb_roots needs the root_perturbed family");
  }
  return consecutive_powers(spec);
}

ConstructionResult perturb_coefficients(const SkewPoly& g, const std::vector<RingElement>& eta, unsigned t) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, g.to_string());
  if (eta.size() != static_cast<std::size_t>(g.degree())) {
    throw Error(ErrorCode::BadParameter, "eta needs one entry per non-leading coefficient");
  }
  for (const auto& x : eta) {
    if (!x.is_nilpotent()) throw Error(ErrorCode::NotNilpotent, x.to_string() + " is a unit");
  }
  if (!is_mds(twisted_chain(g, t)).mds) {
    throw Error(ErrorCode::BaseNotMds, "chain of " + g.to_string() + " is not MDS");
  }
  std::vector<RingElement> coeffs = g.coeffs();
  for (std::size_t i = 0; i < eta.size(); ++i) coeffs[i] += eta[i];
  SkewPoly h(g.ring(), std::move(coeffs));
  Embedding identity = extend_ring(g.ring(), 1).second;
  return guaranteed(finish_result(g.ring(), identity, std::move(h), {}, t, false), "coefficient perturbation");
}

ConstructionResult gap_family(const ConstructionSpec& spec) {
  validate_shape(spec);
  const unsigned k = spec.k;
  std::vector<unsigned> root_exponents;
  switch (spec.family) {
    case Family::gap_at_k:
      for (unsigned j = 0; j + 1 < k; ++j) root_exponents.push_back(j);
      root_exponents.push_back(k);
      break;
    case Family::inverse_gap:
      root_exponents.push_back(0);
      for (unsigned j = 2; j <= k; ++j) root_exponents.push_back(j);
      break;
    case Family::gap_k_plus_1:
      root_exponents.push_back(0);
      for (unsigned j = 2; j < k; ++j) root_exponents.push_back(j);
      root_exponents.push_back(k + 1);
      break;
    default:
      throw Error(ErrorCode::BadParameter, "gap_family cannot build " + family_name(spec.family));
  }
  const unsigned t = spec.chain_length();
  Working w = working_ring(spec.ring, k, t, spec.xi_exponent);

  // Side condition, evaluated on the norms only.
  const auto exponents = ExponentSet::support(k, t).entries();
  const auto norms = sigma_norms(w.xi, exponents.back() + 1);
  const auto inverse_norms = sigma_norms(inverse(w.xi), exponents.back() + 1);
  bool holds = true;
  for (const auto& subset : k_subsets(exponents.size(), k)) {
    RingElement sum = w.ring->zero();
    RingElement inv_sum = w.ring->zero();
    for (auto idx : subset) {
      sum += norms[exponents[idx]];
      inv_sum += inverse_norms[exponents[idx]];
    }
    RingElement value = spec.family == Family::gap_at_k      ? sum
                        : spec.family == Family::inverse_gap ? inv_sum
                                                             : sum * inv_sum - w.ring->one();
    if (!value.is_unit()) {
      holds = false;
      break;
    }
  }

  std::vector<RingElement> roots;
  for (auto j : root_exponents) roots.push_back(w.xi.pow(j));
  SkewPoly g = build_w_poly(roots);
  ConstructionResult result =
      finish_result(w.ring, w.embedding, std::move(g), std::move(roots), t, spec.check_involutory);
  result.xi = w.xi;
  result.condition_holds = holds;
  return result;
}

ConstructionResult frobenius_orbit(const ConstructionSpec& spec) {
  validate_shape(spec);
  if (spec.family != Family::frobenius_orbit && spec.family != Family::frobenius_orbit_with_one) {
    throw Error(ErrorCode::BadParameter, "frobenius_orbit cannot build " + family_name(spec.family));
  }
  if (!spec.ring->is_field()) throw Error(ErrorCode::RequiresFieldCase, "Frobenius-orbit families need s = 1");
  const unsigned k = spec.k;
  const unsigned t = spec.chain_length();
  const Ring& ring = spec.ring;
  const std::uint64_t p = ring->p();
  const std::uint64_t order = ring->residue_size() - 1;
  const RingElement xi = ring->teichmuller_generator().pow(spec.xi_exponent % order);
  const bool with_one = spec.family == Family::frobenius_orbit_with_one;

  std::vector<RingElement> roots;
  if (with_one) roots.push_back(ring->one());
  RingElement power = xi;
  while (roots.size() < k) {
    roots.push_back(power);
    power = power.pow(p);
  }
  if (!all_distinct(roots)) throw Error(ErrorCode::DuplicateRoot, "Frobenius orbit of xi collapses");

  const auto exponents = ExponentSet::support(k, t).entries();
  const auto norms = sigma_norms(xi, exponents.back() + 1);
  bool holds = true;
  for (const auto& subset : k_subsets(exponents.size(), k)) {
    // Nonzero coefficient vectors over Z_p; with_one fixes c_1 = -(c_2 + ... + c_k).
    const std::size_t free = with_one ? k - 1 : k;
    std::vector<std::uint64_t> c(free, 0);
    while (holds) {
      std::size_t pos = 0;
      while (pos < free && ++c[pos] == p) c[pos++] = 0;
      if (pos == free) break;
      RingElement combo = ring->zero();
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < free; ++i) {
        const std::size_t slot = with_one ? i + 1 : i;
        combo += ring->from_int(static_cast<std::int64_t>(c[i])) * norms[exponents[subset[slot]]];
        total += c[i];
      }
      if (with_one) {
        combo += ring->from_int(-static_cast<std::int64_t>(total % p)) * norms[exponents[subset[0]]];
      }
      if (combo.is_zero()) holds = false;
    }
    if (!holds) break;
  }

  SkewPoly g = build_w_poly(roots);
  Embedding identity = extend_ring(ring, 1).second;
  ConstructionResult result = finish_result(ring, identity, std::move(g), std::move(roots), t, spec.check_involutory);
  result.xi = xi;
  result.condition_holds = holds;
  return result;
}

bool guard_constant_term(const SkewPoly& g) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, g.to_string());
  return g.coeff(0).is_unit();
}

ConstructionResult construct(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::consecutive_powers:
    case Family::scaled_consecutive:
    case Family::root_perturbed:
      return consecutive_powers(spec);
    case Family::gap_at_k:
    case Family::inverse_gap:
    case Family::gap_k_plus_1:
      return gap_family(spec);
    case Family::frobenius_orbit:
    case Family::frobenius_orbit_with_one:
      return frobenius_orbit(spec);
    case Family::coeff_perturbed: {
      if (!spec.base_spec) throw Error(ErrorCode::BadParameter, "coeff_perturbed needs a base_spec");
      ConstructionSpec inner = *spec.base_spec;
      if (!inner.ring) inner.ring = spec.ring;
      ConstructionResult base = construct(inner);
      const auto eta = nilpotent_literals(inner.ring, spec.eta, static_cast<std::size_t>(base.g.degree()));
      std::vector<RingElement> lifted;
      for (const auto& x : eta) lifted.push_back(base.embedding(x));
      const unsigned t = spec.t.value_or(base.t);
      ConstructionResult result = perturb_coefficients(base.g, lifted, t);
      result.embedding = base.embedding;
      result.xi = base.xi;
      result.coeffs_in_base.clear();
      for (const auto& c : result.g.coeffs()) {
        result.coeffs_in_base.push_back(base.embedding.is_identity() ||
                                        in_base_subring(c, base.embedding.base()->m()));
      }
      if (spec.check_involutory) result.report.quasi_involutory = check_quasi_involutory(result.g);
      return result;
    }
    case Family::from_poly: {
      if (!spec.ring) throw Error(ErrorCode::BadParameter, "construction needs a ring");
      std::vector<RingElement> coeffs;
      for (const auto& literal : spec.g) coeffs.push_back(reduce_literal(spec.ring, literal));
      SkewPoly g(spec.ring, std::move(coeffs));
      if (!g.is_monic()) throw Error(ErrorCode::NotMonic, g.to_string());
      const unsigned t = spec.t.value_or(static_cast<unsigned>(std::max(g.degree(), 0)));
      Embedding identity = extend_ring(spec.ring, 1).second;
      return finish_result(spec.ring, identity, std::move(g), {}, t, spec.check_involutory);
    }
  }
  throw Error(ErrorCode::BadParameter, "unhandled family");
}

}  // namespace grmds

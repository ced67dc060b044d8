#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grmds/matrix.hpp"

namespace grmds {

enum class Family {
  consecutive_powers,
  scaled_consecutive,
  root_perturbed,
  gap_at_k,
  inverse_gap,
  gap_k_plus_1,
  frobenius_orbit,
  frobenius_orbit_with_one,
  coeff_perturbed,
  from_poly,
};

std::string family_name(Family f);
/// Accepts the names above; '-' and '_' are interchangeable.
Family parse_family(const std::string& name);

using Literal = std::vector<std::int64_t>;

struct ConstructionSpec {
  Family family = Family::consecutive_powers;
  Ring ring;
  unsigned k = 2;
  std::optional<unsigned> t;  // defaults to k
  std::int64_t b = 0;
  std::optional<Literal> c;   // unit scale, base-ring literal
  std::vector<Literal> eta;   // nilpotent perturbations, base-ring literals
  std::shared_ptr<ConstructionSpec> base_spec;  // coeff_perturbed wraps another family
  /// xi = tau^xi_exponent for the working ring's Teichmueller generator tau.
  std::uint64_t xi_exponent = 1;
  std::vector<Literal> g;     // from_poly: coefficients low-to-high, monic
  bool check_involutory = false;

  unsigned chain_length() const { return t.value_or(k); }
};

struct ConstructionResult {
  Ring ring;            // working ring (base or an extension)
  Embedding embedding;  // base -> working ring
  SkewPoly g;
  std::vector<RingElement> roots;
  std::optional<RingElement> xi;
  unsigned t = 0;
  GRMatrix m;
  VerificationReport report;
  std::vector<bool> coeffs_in_base;
  /// Side condition of the gap and Frobenius families.
  std::optional<bool> condition_holds;
};

/// Extension degree l such that the norms N_i(tau^xi_exponent), i in E, have
/// pairwise distinct residues (and the k consecutive exponents from b are distinct).
unsigned working_extension_degree(const Ring& base, unsigned k, unsigned t, std::uint64_t xi_exponent);

/// Roots c xi^{b}, ..., c xi^{b+k-1} (+ eta_j for root_perturbed). MDS is guaranteed;
/// a non-MDS verdict raises InternalInconsistency.
ConstructionResult consecutive_powers(const ConstructionSpec& spec);
ConstructionResult perturb_roots(const ConstructionSpec& spec);

/// h = g + sum eta_i X^i. Needs nilpotent eta (NotNilpotent) and an MDS chain for g (BaseNotMds).
ConstructionResult perturb_coefficients(const SkewPoly& g, const std::vector<RingElement>& eta, unsigned t);

/// gap_at_k, inverse_gap, gap_k_plus_1: evaluates the family condition over all
/// k-subsets of E and reports it next to the verdict.
ConstructionResult gap_family(const ConstructionSpec& spec);

/// frobenius_orbit, frobenius_orbit_with_one (fields only).
ConstructionResult frobenius_orbit(const ConstructionSpec& spec);

/// False when g_0 is a non-unit; then no chain of g is MDS.
bool guard_constant_term(const SkewPoly& g);

/// Dispatches on spec.family.
ConstructionResult construct(const ConstructionSpec& spec);

/// Chain, verdict and base-ring flags for an explicit g over the working ring.
ConstructionResult finish_result(Ring ring, Embedding embedding, SkewPoly g, std::vector<RingElement> roots,
                                 unsigned t, bool check_involutory);

}  // namespace grmds

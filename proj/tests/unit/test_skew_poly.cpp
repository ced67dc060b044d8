#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace grmds;
using namespace grmds::testing;

namespace {

std::vector<Ring> rings() {
  return {make_ring(2, 2, 4, std::nullopt, 1), make_ring(3, 1, 3, std::nullopt, 1),
          make_ring(5, 2, 3, std::vector<std::int64_t>{3, 3, 0, 1}, 2), make_ring(2, 1, 4, std::nullopt, 0)};
}

}  // namespace

TEST_CASE("skew multiplication twists by sigma") {
  const Ring r = make_ring(2, 1, 4, std::nullopt, 1);
  const RingElement z = r->zeta();
  const SkewPoly x = SkewPoly::monomial(r->one(), 1);
  const SkewPoly a = SkewPoly::constant(z);
  CHECK(smul(x, a) == SkewPoly::monomial(apply_sigma(z), 1));
  CHECK(smul(a, x) == SkewPoly::monomial(z, 1));
  CHECK_FALSE(smul(x, a) == smul(a, x));
}

TEST_CASE("to_string") {
  const Ring r = make_ring(5, 2, 3, std::vector<std::int64_t>{3, 3, 0, 1}, 2);
  const SkewPoly g(r, {r->one(), r->from_int(2), r->zeta().pow(3), r->zero(), r->one()});
  CHECK(g.to_string() == "1 + 2X + (22 + 22z)X^2 + X^4");
  CHECK(SkewPoly(r).to_string() == "0");
}

TEST_CASE("right division identity and uniqueness") {
  std::mt19937_64 rng(21);
  for (const Ring& r : rings()) {
    for (int i = 0; i < 100; ++i) {
      const SkewPoly f = random_poly(r, 6, rng);
      std::vector<RingElement> gc;
      for (int j = 0; j < 3; ++j) gc.push_back(random_element(r, rng));
      gc.push_back(random_unit(r, rng));
      const SkewPoly g(r, gc);
      const DivMod qr = right_divmod(f, g);
      CHECK(smul(qr.quotient, g) + qr.remainder == f);
      CHECK(qr.remainder.degree() < g.degree());
      // Any other (q', r') with f = q' g + r' and small r' has q' = q.
      const SkewPoly q2 = qr.quotient + random_poly(r, 1, rng);
      const SkewPoly r2 = f - smul(q2, g);
      if (!(q2 == qr.quotient)) CHECK(r2.degree() >= g.degree());
    }
  }
}

TEST_CASE("division by a non-unit leading coefficient is rejected") {
  const Ring r = make_ring(2, 2, 2);
  const SkewPoly g(r, {r->one(), r->from_int(2)});
  try {
    right_divmod(SkewPoly::monomial(r->one(), 3), g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitLeadingCoefficient);
  }
}

TEST_CASE("evaluation equals the remainder by X - beta") {
  std::mt19937_64 rng(23);
  for (const Ring& r : rings()) {
    for (int i = 0; i < 100; ++i) {
      const SkewPoly f = random_poly(r, 5, rng);
      const RingElement beta = random_element(r, rng);
      CHECK(right_eval(f, beta) == right_eval_by_division(f, beta));
    }
  }
}

TEST_CASE("sigma norms follow the recurrence and the product definition") {
  std::mt19937_64 rng(29);
  for (const Ring& r : rings()) {
    for (int i = 0; i < 50; ++i) {
      const RingElement beta = random_element(r, rng);
      const auto norms = sigma_norms(beta, 6);
      CHECK(norms[0].is_one());
      RingElement product = r->one();
      for (unsigned j = 0; j < 6; ++j) {
        CHECK(norms[j] == product);
        CHECK(sigma_norm(beta, j) == product);
        product *= apply_sigma(beta, j);
      }
      for (unsigned j = 0; j + 1 < 6; ++j) CHECK(norms[j + 1] == apply_sigma(norms[j]) * beta);
    }
  }
}

TEST_CASE("skew multiplication is associative and distributive") {
  std::mt19937_64 rng(31);
  for (const Ring& r : rings()) {
    for (int i = 0; i < 50; ++i) {
      const SkewPoly a = random_poly(r, 3, rng);
      const SkewPoly b = random_poly(r, 2, rng);
      const SkewPoly c = random_poly(r, 3, rng);
      CHECK(smul(smul(a, b), c) == smul(a, smul(b, c)));
      CHECK(smul(a, b + c) == smul(a, b) + smul(a, c));
    }
  }
}

TEST_CASE("W-polynomials vanish at their roots and detect degeneracy") {
  const Ring r = make_ring(2, 2, 4, std::vector<std::int64_t>{1, 1, 0, 0, 1}, 1);
  const RingElement z = r->zeta();
  const std::vector<RingElement> roots{r->one(), z, z * z};
  const SkewPoly g = build_w_poly(roots);
  CHECK(g.degree() == 3);
  CHECK(g.is_monic());
  for (const auto& a : roots) CHECK(is_right_root(g, a));
  // Every root factor X - a divides g on the right.
  for (const auto& a : roots) CHECK(right_divides(SkewPoly::x_minus(a), g));

  try {
    build_w_poly({z, z});
    FAIL("expected DuplicateRoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateRoot);
  }
  try {
    build_w_poly({z, z + r->from_int(2)});
    FAIL("expected DependentRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DependentRoots);
  }
}

TEST_CASE("central elements") {
  const Ring r = make_ring(2, 1, 4, std::nullopt, 1);
  CHECK(is_central(x_pow_minus_one(r, 4)));
  CHECK_FALSE(is_central(x_pow_minus_one(r, 3)));
  CHECK_FALSE(is_central(SkewPoly::constant(r->zeta())));
}

TEST_CASE("right roots of unity are right roots of X^n - 1") {
  for (auto [p, s, m, e, n] : {std::tuple{3u, 1u, 2u, 1u, 4u}, {2u, 2u, 2u, 1u, 3u}, {2u, 1u, 4u, 0u, 3u}}) {
    const Ring base = make_ring(p, s, m, std::nullopt, e);
    const RootsOfUnity ru = right_roots_of_unity(base, n);
    REQUIRE_FALSE(ru.roots.empty());
    const SkewPoly f = x_pow_minus_one(ru.ring, n);
    for (const auto& a : ru.roots) CHECK(is_right_root(f, a));
  }
  CHECK(right_roots_of_unity(make_ring(3, 1, 2, std::nullopt, 1), 4).roots.size() == 40);
  try {
    right_roots_of_unity(make_ring(2, 1, 2), 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharacteristicDividesLength);
  }
}

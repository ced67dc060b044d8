#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace grmds;
using namespace grmds::testing;

namespace {

Ring example_ring() { return make_ring(5, 2, 3, std::vector<std::int64_t>{3, 3, 0, 1}, 2); }

SkewPoly example_g(const Ring& r) { return SkewPoly(r, {r->one(), r->from_int(2), r->from_int(2), r->one()}); }

GRMatrix ints(const Ring& r, std::size_t k, std::initializer_list<std::int64_t> values) {
  std::vector<RingElement> e;
  for (auto v : values) e.push_back(r->from_int(v));
  return GRMatrix(r, k, k, e);
}

}  // namespace

TEST_CASE("companion and chain of the GR(25, 5^6) example") {
  const Ring r = example_ring();
  const SkewPoly g = example_g(r);
  const GRMatrix c = companion(g);
  CHECK(c == ints(r, 3, {0, 1, 0, 0, 0, 1, 24, 23, 23}));
  const GRMatrix n = twisted_chain(g, 3);
  CHECK(n == ints(r, 3, {24, 23, 23, 2, 3, 2, 23, 23, 24}));
  CHECK(n * n == GRMatrix::identity(r, 3));
  CHECK(is_mds(n).mds);
  CHECK(check_quasi_involutory(g));
}

TEST_CASE("chain equals the remainder matrix") {
  std::mt19937_64 rng(41);
  for (const Ring& r : {make_ring(2, 2, 4, std::nullopt, 1), make_ring(3, 1, 3, std::nullopt, 2)}) {
    for (int i = 0; i < 30; ++i) {
      const SkewPoly g = random_monic(r, 3, rng);
      for (unsigned t = 1; t <= 6; ++t) CHECK(twisted_chain(g, t) == chain_from_remainders(g, t));
    }
  }
}

TEST_CASE("companion preconditions") {
  const Ring r = make_ring(2, 1, 3);
  try {
    companion(SkewPoly(r, {r->one(), r->zeta()}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMonic);
  }
  try {
    companion(SkewPoly::x_minus(r->one()));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeTooSmall);
  }
}

TEST_CASE("twisting is a multiplicative homomorphism") {
  std::mt19937_64 rng(43);
  const Ring r = make_ring(2, 2, 4, std::nullopt, 1);
  for (int i = 0; i < 30; ++i) {
    const GRMatrix a = random_matrix(r, 3, 3, rng);
    const GRMatrix b = random_matrix(r, 3, 3, rng);
    CHECK(sigma_twist(a * b, 1) == sigma_twist(a, 1) * sigma_twist(b, 1));
    CHECK(sigma_twist(a, r->sigma_order()) == a);
  }
}

TEST_CASE("determinant agrees with the Leibniz formula") {
  std::mt19937_64 rng(47);
  for (const Ring& r : {make_ring(2, 2, 2), make_ring(3, 2, 2), make_ring(2, 1, 5)}) {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (int i = 0; i < 10; ++i) {
        const GRMatrix a = random_matrix(r, k, k, rng);
        CHECK(determinant(a) == leibniz_det(a));
      }
    }
  }
}

TEST_CASE("is_mds agrees with brute-force ring minors on Z4 and GR(4, 16)") {
  std::mt19937_64 rng(53);
  for (const Ring& r : {make_ring(2, 2, 1), make_ring(2, 2, 2)}) {
    int mds = 0;
    for (int i = 0; i < 300; ++i) {
      const std::size_t k = 2 + i % 2;
      const GRMatrix a = random_matrix(r, k, k, rng);
      const bool expected = all_minors_unit_leibniz(a);
      CHECK(is_mds(a).mds == expected);
      CHECK(all_minors_unit_in_ring(a) == expected);
      mds += expected;
    }
    if (r->m() == 2) CHECK(mds > 0);
  }
}

TEST_CASE("witness is the first singular minor") {
  const Ring r = make_ring(2, 1, 2);
  const VerificationReport rep = is_mds(GRMatrix::identity(r, 3));
  CHECK_FALSE(rep.mds);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->rows == std::vector<std::size_t>{0});
  CHECK(rep.witness->cols == std::vector<std::size_t>{1});
}

TEST_CASE("quasi-involutory preconditions") {
  const Ring r = make_ring(2, 1, 4, std::nullopt, 1);
  const SkewPoly g(r, {r->one(), r->zeta(), r->one()});
  try {
    check_quasi_involutory(g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

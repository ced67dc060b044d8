#include "grmds/reproduce.hpp"

#include <chrono>

namespace grmds {

namespace {

std::string show(const Json& j) { return j.dump(); }

Json row_as_json(const GRMatrix& a, std::size_t r) {
  Json row = Json::array();
  for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(element_to_json(a.at(r, c)));
  return row;
}

Json matrix_as_json(const GRMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(row_as_json(a, r));
  return rows;
}

// Compares a golden element list against actual elements, accepting integer shorthand.
bool same_elements(const Ring& ring, const Json& expected, const std::vector<RingElement>& actual) {
  if (!expected.is_array() || expected.size() != actual.size()) return false;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (!(element_from_json(ring, expected[i]) == actual[i])) return false;
  }
  return true;
}

ExampleOutcome run_one(const Json& ex) {
  ExampleOutcome out;
  out.name = ex.value("name", std::string("unnamed"));
  const auto start = std::chrono::steady_clock::now();
  try {
    const Ring ring = ring_from_json(ex.at("ring"));
    const unsigned t = ex.at("t").get<unsigned>();
    auto check_bool = [&](const char* key, bool actual) {
      if (ex.contains(key) && ex.at(key).get<bool>() != actual) {
        out.diffs.push_back(std::string(key) + ": expected " + show(ex.at(key)) + ", got " + (actual ? "true" : "false"));
      }
    };

    SkewPoly g;
    std::vector<RingElement> roots;
    if (ex.contains("g")) {
      std::vector<RingElement> coeffs;
      for (const auto& c : ex.at("g")) coeffs.push_back(element_from_json(ring, c));
      g = SkewPoly(ring, std::move(coeffs));
    } else {
      for (const auto& e : ex.at("root_exponents")) roots.push_back(ring->zeta().pow(e.get<std::uint64_t>()));
      g = build_w_poly(roots);
    }
    const auto k = static_cast<std::size_t>(g.degree());

    if (ex.contains("divides_x_pow_minus_one")) {
      const auto n = ex.at("divides_x_pow_minus_one").get<unsigned>();
      if (!right_divides(g, x_pow_minus_one(ring, n))) {
        out.diffs.push_back("divides_x_pow_minus_one: g does not right-divide X^" + std::to_string(n) + " - 1");
      }
    }
    if (ex.contains("companion_last_row")) {
      const GRMatrix c = companion(g);
      std::vector<RingElement> last;
      for (std::size_t j = 0; j < k; ++j) last.push_back(c.at(k - 1, j));
      if (!same_elements(ring, ex.at("companion_last_row"), last)) {
        out.diffs.push_back("companion_last_row: expected " + show(ex.at("companion_last_row")) + ", got " +
                            show(row_as_json(c, k - 1)));
      }
    }
    const GRMatrix m = twisted_chain(g, t);
    if (ex.contains("chain")) {
      bool same = ex.at("chain").is_array() && ex.at("chain").size() == k;
      for (std::size_t r = 0; same && r < k; ++r) {
        std::vector<RingElement> row;
        for (std::size_t c = 0; c < k; ++c) row.push_back(m.at(r, c));
        same = same_elements(ring, ex.at("chain")[r], row);
      }
      if (!same) {
        out.diffs.push_back("chain: expected " + show(ex.at("chain")) + ", got " + show(matrix_as_json(m)));
      }
    }
    if (ex.contains("chain_squared_is_identity")) {
      check_bool("chain_squared_is_identity", m * m == GRMatrix::identity(ring, k));
    }
    if (ex.contains("quasi_involutory")) check_bool("quasi_involutory", check_quasi_involutory(g));
    if (ex.contains("mds")) check_bool("mds", is_mds(m).mds);
    if (ex.contains("perturbed_mds")) {
      std::vector<RingElement> perturbed = roots;
      const Json& eta = ex.at("eta");
      for (std::size_t j = 0; j < perturbed.size() && j < eta.size(); ++j) {
        perturbed[j] += element_from_json(ring, eta[j]);
      }
      check_bool("perturbed_mds", is_mds(twisted_chain(build_w_poly(perturbed), t)).mds);
    }
  } catch (const std::exception& e) {
    out.diffs.push_back(std::string("error: ") + e.what());
  }
  out.pass = out.diffs.empty();
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

std::vector<ExampleOutcome> run_examples(const Json& golden) {
  if (!golden.contains("examples") || !golden.at("examples").is_array()) {
    throw Error(ErrorCode::ParseError, "golden document needs an 'examples' array");
  }
  std::vector<ExampleOutcome> out;
  for (const auto& ex : golden.at("examples")) out.push_back(run_one(ex));
  return out;
}

}  // namespace grmds

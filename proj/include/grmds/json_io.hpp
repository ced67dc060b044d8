#pragma once

#include <json.hpp>

#include "grmds/constructions.hpp"

namespace grmds {

using Json = nlohmann::json;

// {"p":5,"s":2,"m":3,"modulus":[3,3,0,1],"sigma_exponent":2}
Json ring_to_json(const Ring& ring);
/// The modulus field is optional; without it the default modulus is chosen.
Ring ring_from_json(const Json& j);

// Element literal: coefficient list low-to-high.
Json element_to_json(const RingElement& x);
RingElement element_from_json(const Ring& ring, const Json& j);

Json poly_to_json(const SkewPoly& f);
SkewPoly poly_from_json(const Json& j);

Json matrix_to_json(const GRMatrix& a);
GRMatrix matrix_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

Json spec_to_json(const ConstructionSpec& spec);
/// `fallback_ring` is used when the object carries no "ring" field.
ConstructionSpec spec_from_json(const Json& j, const Ring& fallback_ring = nullptr);

Json result_to_json(const ConstructionResult& r);

/// Signed integer list from JSON; ParseError on anything else.
Literal literal_from_json(const Json& j);

}  // namespace grmds

#pragma once

#include <string>

#include <json.hpp>

#include "weylcalc/majorization.hpp"
#include "weylcalc/matrix.hpp"
#include "weylcalc/partition.hpp"
#include "weylcalc/weights.hpp"

namespace weylcalc {

using Json = nlohmann::json;

/// Weight wire form: {"entries": {"<index>": <int>, ...}}; a bare index map
/// is also accepted. Zero values are rejected.
Weight weight_from_json(const Json& j);
Json weight_to_json(const Weight& w);

/// Rational weight: same shape with values as integers or "p/q" strings.
RationalWeight rational_weight_from_json(const Json& j);
Json rational_weight_to_json(const RationalWeight& w);

/// Matrix wire form: {"n": int, "re": [[...]], "im": [[...]]}, entries as
/// integers or "p/q" strings; "im" may be omitted for real matrices.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

Partition partition_from_json(const Json& j);
Json partition_to_json(const Partition& p);

Json signature_to_json(const OrbitSignature& s);

Rat rational_from_json(const Json& j);

}  // namespace weylcalc

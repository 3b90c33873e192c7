#pragma once

#include <json.hpp>

#include "bispec/algebra/gaussian_rational.hpp"
#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/matrix.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/algebra/rational_function.hpp"

namespace bispec::algebra {

// Key order is insertion order so that output is byte-stable.
using Json = nlohmann::ordered_json;

// Encoders emit canonical "p/q" strings; decoders also accept bare
// integers ("3") and throw ParseError on anything malformed.
Json to_json(const GaussianRational& z);
Json to_json(const MatC& m);
Json to_json(const MatPoly& p);
Json to_json(const ScalarPoly& p);
Json to_json(const RatMatZ& f);
Json to_json(const MatLaurent& v);

GaussianRational gaussian_from_json(const Json& j);
MatC mat_from_json(const Json& j);
MatPoly matpoly_from_json(const Json& j);
ScalarPoly scalarpoly_from_json(const Json& j);
RatMatZ ratmat_from_json(const Json& j);
MatLaurent laurent_from_json(const Json& j);

}  // namespace bispec::algebra

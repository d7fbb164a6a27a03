#pragma once

// JSON encodings of rings, elements, points, polynomials, series and norms.
// Exact numbers travel as strings ("a/b").

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "wst/points.hpp"
#include "wst/polynomial.hpp"
#include "wst/series.hpp"

namespace wst::io {

using json = nlohmann::json;

/// InvalidArgument on a key outside `allowed`.
void expect_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where);
const json& field(const json& j, const char* key, const std::string& where);

Rational rational_from_json(const json& j);
long integer_from_json(const json& j);

BaseRing ring_from_json(const json& j);
json ring_to_json(const BaseRing& ring);

/// Z, Q: "a/b" strings; C: [re, im]; p-adic: "a/b" (exact) or
/// {"val": v, "unit": "u"} with optional "rel" for a finite-precision element.
RingElement element_from_json(const BaseRing& ring, const json& j);
json element_to_json(const BaseRing& ring, const RingElement& x);

/// Coefficient list, low degree first.
Polynomial polynomial_from_json(const BaseRing& ring, const json& j);
json polynomial_to_json(const Polynomial& p);

SpectrumPoint point_from_json(const json& j);
json point_to_json(const SpectrumPoint& b);
FiberPoint fiber_from_json(const BaseRing& ring, const json& j);
json fiber_to_json(const BaseRing& ring, const FiberPoint& x);

/// {"lo", "coeffs", "inner", "outer", "tail"}; only "coeffs" is required.
Series series_from_json(const BaseRing& ring, const json& j);
json series_to_json(const Series& f);

json norm_to_json(const NormValue& v);

}  // namespace wst::io

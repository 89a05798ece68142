#pragma once

// Canonical JSON forms. Polynomials are {"coeffs": [["num","den"], ...]} in
// ascending order with decimal-string integers.

#include "json.hpp"

#include "linial/arrangement.hpp"
#include "linial/ehrhart.hpp"
#include "linial/ratpoly.hpp"
#include "linial/rootdata.hpp"
#include "linial/verify.hpp"

namespace linial {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const RatPoly& p);
Json to_json(const ShiftPoly& p);
Json to_json(const QuasiPoly& q);
Json to_json(const RootSystemData& d);
Json to_json(const AdmissibleReport& r);
Json to_json(const ComplexRootSet& r);
Json to_json(const LineCheckReport& r);
Json to_json(const HalfPlaneReport& r);
Json to_json(const TrackPoint& p);
Json to_json(const std::complex<double>& z);

/// Throw Error(InvalidArgument) on malformed input.
Rational rational_from_json(const Json& j);
RatPoly ratpoly_from_json(const Json& j);
QuasiPoly quasipoly_from_json(const Json& j);

}  // namespace linial

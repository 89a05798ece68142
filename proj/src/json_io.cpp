#include "linial/json_io.hpp"

#include "linial/error.hpp"

namespace linial {

Json to_json(const Rational& r) { return Json::array({r.num().get_str(), r.den().get_str()}); }

Json to_json(const RatPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}};
}

Json to_json(const ShiftPoly& p) { return to_json(p.as_poly()); }

Json to_json(const QuasiPoly& q) {
  Json cs = Json::array();
  for (const auto& c : q.constituents()) cs.push_back(to_json(c));
  return Json{{"period", q.period()}, {"constituents", cs}};
}

Json to_json(const RootSystemData& d) {
  return Json{{"name", d.id.name()},
              {"rank", d.rank},
              {"exponents", d.exponents},
              {"marks", d.marks},
              {"coxeter_number", d.coxeter_number},
              {"index_of_connection", d.index_of_connection},
              {"weyl_order", d.weyl_order.get_str()},
              {"period", d.period},
              {"rad_period", d.rad_period}};
}

Json to_json(const AdmissibleReport& r) {
  return Json{{"residues", r.residues}, {"divisors", r.divisors}, {"m0", r.m0}};
}

Json to_json(const std::complex<double>& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ComplexRootSet& r) {
  Json roots = Json::array();
  for (const auto& z : r.roots) roots.push_back(to_json(z));
  return Json{{"roots", roots},
              {"residual_bound", r.residual_bound},
              {"certified_radius", r.certified_radius},
              {"converged", r.converged},
              {"iterations", r.iterations}};
}

Json to_json(const LineCheckReport& r) {
  Json j{{"on_line", r.on_line}, {"center", to_json(r.center)}, {"method", std::string(to_string(r.method))}};
  if (r.method == LineMethod::ExactSturm) {
    j["details"] = Json{{"parity_ok", r.parity_ok},
                        {"reduced", to_json(r.reduced)},
                        {"reduced_nonpositive_roots", r.reduced_nonpositive_roots},
                        {"reduced_distinct_roots", r.reduced_distinct_roots}};
  } else {
    Json roots = Json::array();
    for (const auto& z : r.roots) roots.push_back(to_json(z));
    j["details"] = Json{{"roots", roots}, {"max_deviation", r.max_deviation}};
  }
  return j;
}

Json to_json(const HalfPlaneReport& r) {
  return Json{{"verdict", std::string(to_string(r.verdict))},
              {"method", r.exact ? "exact-routh" : "numeric"},
              {"max_real", r.max_real},
              {"margin", r.margin}};
}

Json to_json(const TrackPoint& p) {
  Json roots = Json::array();
  for (const auto& z : p.scaled_roots) roots.push_back(to_json(z));
  return Json{{"m", p.m}, {"distance", p.distance}, {"max_real_deviation", p.max_real_deviation}, {"scaled_roots", roots}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw Error(ErrorCode::InvalidArgument, "rational must be [\"num\", \"den\"]");
  const Rational num = Rational::parse(j[0].get<std::string>());
  const Rational den = Rational::parse(j[1].get<std::string>());
  if (!num.is_integer() || !den.is_integer() || den.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "rational needs integer numerator and positive denominator");
  return num / den;
}

RatPoly ratpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw Error(ErrorCode::InvalidArgument, "polynomial must be {\"coeffs\": [...]}");
  std::vector<Rational> cs;
  for (const auto& c : j["coeffs"]) cs.push_back(rational_from_json(c));
  return RatPoly(std::move(cs));
}

QuasiPoly quasipoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("period") || !j.contains("constituents") || !j["period"].is_number_integer())
    throw Error(ErrorCode::InvalidArgument, "quasi-polynomial must be {\"period\": n, \"constituents\": [...]}");
  std::vector<RatPoly> cs;
  for (const auto& c : j["constituents"]) cs.push_back(ratpoly_from_json(c));
  return QuasiPoly(j["period"].get<int>(), std::move(cs));
}

}  // namespace linial

#pragma once

#include <ostream>

#include "linial/ratpoly.hpp"

namespace linial {

// Readable gtest failure messages.
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.str(); }
inline void PrintTo(const RatPoly& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace linial

inline linial::RatPoly P(std::initializer_list<long> ascending, long den = 1) {
  std::vector<linial::Rational> c;
  for (long v : ascending) c.emplace_back(linial::BigInt(v), linial::BigInt(den));
  return linial::RatPoly(std::move(c));
}

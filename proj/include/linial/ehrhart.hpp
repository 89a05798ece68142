#pragma once

// Quasi-polynomials and the Ehrhart quasi-polynomial of the closed
// fundamental alcove.

#include <optional>
#include <utility>
#include <vector>

#include "linial/ratpoly.hpp"
#include "linial/rootdata.hpp"

namespace linial {

/// Residue of q modulo a positive period, always in [0, period).
long residue(long q, long period);

/// One polynomial per residue class modulo the period.
class QuasiPoly {
 public:
  QuasiPoly() = default;
  QuasiPoly(int period, std::vector<RatPoly> constituents);

  int period() const { return period_; }
  const std::vector<RatPoly>& constituents() const { return constituents_; }
  /// Constituent for the class of d (any integer).
  const RatPoly& constituent(long d) const;

  Rational value(long q) const;
  Rational value(const BigInt& q) const;

  friend bool operator==(const QuasiPoly&, const QuasiPoly&) = default;

 private:
  int period_ = 1;
  std::vector<RatPoly> constituents_;
};

struct GcdPropertyReport {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
};

/// Built from denumerant counts and exact interpolation per residue class;
/// throws Error(Internal) if the interpolants miss any verification sample.
QuasiPoly ehrhart_qp(const RootSystemId& id);

/// First n coefficients of 1 / prod_{i=0}^{l} (1 - z^{c_i}), by power-series
/// division.
std::vector<BigInt> series_coeffs(const RootSystemId& id, int n);

/// L(-q) = (-1)^l L(q - h) as identities between constituents.
bool check_reciprocity(const QuasiPoly& l, int rank, int coxeter_number);

/// Constituent d of the result is sum_i f_i * L_{d - k i}(t - k i).
QuasiPoly apply_shift_qp(const ShiftPoly& f, int k, const QuasiPoly& l);

GcdPropertyReport gcd_property(const QuasiPoly& l);

/// Exact Lagrange interpolation through (x_i, y_i) with distinct x_i.
RatPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace linial

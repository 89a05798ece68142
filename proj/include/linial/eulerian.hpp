#pragma once

#include "linial/ratpoly.hpp"
#include "linial/rootdata.hpp"

namespace linial {

/// x * A_l(x), with A_l the classical Eulerian polynomial (degree l, lowest term x).
RatPoly classical_eulerian(int rank);

/// Generalized Eulerian polynomial via the cyclotomic product
/// [c_0]_x [c_1]_x ... [c_l]_x * R_{A_l}(x).
RatPoly generalized_eulerian(const RootSystemId& id);

/// Lower half of R: coefficients of index < h/2, plus half the middle
/// coefficient when h is even. Requires deg R = h - 1.
RatPoly truncate_half(const RatPoly& r, int coxeter_number);

/// (1/f) * sum over the Weyl group of x^asc(w), by explicit enumeration.
/// Rank <= 3 only.
RatPoly asc_oracle(const RootSystemId& id);

}  // namespace linial

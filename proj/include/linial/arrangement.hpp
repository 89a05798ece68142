#pragma once

// Characteristic quasi-polynomials of extended Linial arrangements
// {alpha = k : alpha positive, k = 1..m} and of Weyl arrangements, expressed
// through the Eulerian polynomial acting by shifts on the alcove Ehrhart
// quasi-polynomial.

#include <optional>
#include <vector>

#include "linial/ehrhart.hpp"
#include "linial/ratpoly.hpp"
#include "linial/rootdata.hpp"

namespace linial {

/// R(S^{m+1}) L. m = 0 is the empty arrangement.
QuasiPoly char_quasi(const RootSystemId& id, int m);

/// Residue-1 constituent of char_quasi.
RatPoly char_poly(const RootSystemId& id, int m);

/// R^{1/2}(S^{m+1}) L.
QuasiPoly half_char_quasi(const RootSystemId& id, int m);

/// (-1)^l (|W|/f) L(-q).
QuasiPoly weyl_char_quasi(const RootSystemId& id);

struct AdmissibleReport {
  std::vector<int> residues;  // admissible d in [0, period)
  std::vector<int> divisors;  // admissible divisors of the period; residue 0 is reported as the period
  int m0 = 1;                 // period / gcd(h, period)
};

AdmissibleReport admissible_residues(const RootSystemId& id);

/// F_d^{(m)}(t) = 1/(2 m0) sum_{k<m0} (L'_{d+kh}(t) + L'_{-d+kh}(t)), where L'
/// are the half quasi-polynomial constituents. Throws Error(NotAdmissible).
RatPoly averaged_half(const RootSystemId& id, int m, int d);

/// Same average from a precomputed half quasi-polynomial and admissibility
/// report, for sweeps over many residues.
RatPoly averaged_half(const QuasiPoly& half, const AdmissibleReport& admissible, int coxeter_number, int d);

/// prod (t + e_i)
RatPoly default_toy_seed(const RootSystemId& id);

/// R(S^{m+1}) g. g defaults to default_toy_seed; a supplied g must have
/// degree l and satisfy g(t - h) = (-1)^l g(-t), else Error(SymmetryViolation).
RatPoly toy_poly(const RootSystemId& id, int m, const std::optional<RatPoly>& g = std::nullopt);

}  // namespace linial

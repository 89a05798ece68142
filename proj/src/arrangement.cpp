#include "linial/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "linial/error.hpp"
#include "linial/eulerian.hpp"

namespace linial {

namespace {

void require_nonnegative(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "Linial parameter m must be >= 0");
}

Rational parity_sign(int rank) { return rank % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

QuasiPoly char_quasi(const RootSystemId& id, int m) {
  require_nonnegative(m);
  return apply_shift_qp(ShiftPoly(generalized_eulerian(id)), m + 1, ehrhart_qp(id));
}

RatPoly char_poly(const RootSystemId& id, int m) { return char_quasi(id, m).constituent(1); }

QuasiPoly half_char_quasi(const RootSystemId& id, int m) {
  require_nonnegative(m);
  const RootSystemData data = lookup(id);
  const RatPoly half = truncate_half(generalized_eulerian(id), data.coxeter_number);
  return apply_shift_qp(ShiftPoly(half), m + 1, ehrhart_qp(id));
}

QuasiPoly weyl_char_quasi(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  const QuasiPoly l = ehrhart_qp(id);
  const Rational scale = parity_sign(data.rank) * Rational(data.weyl_order) / Rational(data.index_of_connection);
  std::vector<RatPoly> out;
  for (int d = 0; d < l.period(); ++d) out.push_back(l.constituent(-d).compose_linear(-1, 0) * scale);
  return QuasiPoly(l.period(), std::move(out));
}

AdmissibleReport admissible_residues(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  const int n = data.period;
  const int h = data.coxeter_number;
  AdmissibleReport report;
  report.m0 = n / std::gcd(h, n);
  for (int d = 0; d < n; ++d) {
    bool ok = true;
    for (int k = 0; k < report.m0 && ok; ++k)
      ok = std::gcd(d, n) == std::gcd(static_cast<int>(residue(d + static_cast<long>(k) * h, n)), n);
    if (!ok) continue;
    report.residues.push_back(d);
  }
  for (int divisor = 1; divisor <= n; ++divisor) {
    if (n % divisor) continue;
    const int d = divisor % n;
    for (int r : report.residues)
      if (r == d) report.divisors.push_back(divisor);
  }
  return report;
}

RatPoly averaged_half(const RootSystemId& id, int m, int d) {
  require_nonnegative(m);
  const RootSystemData data = lookup(id);
  return averaged_half(half_char_quasi(id, m), admissible_residues(id), data.coxeter_number, d);
}

RatPoly averaged_half(const QuasiPoly& half, const AdmissibleReport& admissible, int coxeter_number, int d) {
  const int dd = static_cast<int>(residue(d, half.period()));
  if (std::find(admissible.residues.begin(), admissible.residues.end(), dd) == admissible.residues.end())
    throw Error(ErrorCode::NotAdmissible, "residue " + std::to_string(d) + " is not admissible");
  RatPoly acc;
  for (int k = 0; k < admissible.m0; ++k) {
    const long kh = static_cast<long>(k) * coxeter_number;
    acc += half.constituent(dd + kh);
    acc += half.constituent(-dd + kh);
  }
  return acc * Rational(BigInt(1), BigInt(2 * admissible.m0));
}

RatPoly default_toy_seed(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  std::vector<Rational> roots;
  for (int e : data.exponents) roots.emplace_back(-e);
  return RatPoly::from_roots(roots);
}

RatPoly toy_poly(const RootSystemId& id, int m, const std::optional<RatPoly>& g) {
  require_nonnegative(m);
  const RootSystemData data = lookup(id);
  const RatPoly seed = g ? *g : default_toy_seed(id);
  if (seed.degree() != data.rank)
    throw Error(ErrorCode::SymmetryViolation, "toy seed must have degree equal to the rank");
  const RatPoly lhs = seed.shifted(Rational(data.coxeter_number));
  const RatPoly rhs = seed.compose_linear(-1, 0) * parity_sign(data.rank);
  if (lhs != rhs) throw Error(ErrorCode::SymmetryViolation, "toy seed violates g(t-h) = (-1)^l g(-t)");
  return apply_shift(ShiftPoly(generalized_eulerian(id)), m + 1, seed);
}

}  // namespace linial

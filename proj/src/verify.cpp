#include "linial/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "linial/arrangement.hpp"
#include "linial/error.hpp"
#include "linial/eulerian.hpp"

namespace linial {

namespace {

using cplx = std::complex<double>;

// Unique positive root of x^n - sum_{i<n} |b_i| x^i for monic b.
double cauchy_radius(const std::vector<double>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  auto f = [&](double x) {
    double acc = 1.0;
    for (int i = n - 1; i >= 0; --i) acc = acc * x - std::abs(monic[static_cast<std::size_t>(i)]);
    return acc;
  };
  double hi = 1.0;
  for (int i = 0; i < n; ++i) hi = std::max(hi, 1.0 + std::abs(monic[static_cast<std::size_t>(i)]));
  // A zero constant term (root at the centroid) still leaves a positive root
  // unless every lower coefficient vanishes.
  if (std::all_of(monic.begin(), monic.end() - 1, [](double b) { return b == 0.0; })) return 0.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return hi;
}

struct Horner {
  cplx value;
  cplx deriv;
};

Horner eval_with_derivative(const std::vector<double>& c, cplx z) {
  cplx p(0.0), dp(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

double relative_residual(const std::vector<double>& c, cplx z) {
  cplx p(0.0);
  double scale = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    p = p * z + *it;
    scale = scale * az + std::abs(*it);
  }
  return scale > 0.0 ? std::abs(p) / scale : 0.0;
}

struct FactorRoots {
  std::vector<cplx> roots;
  std::vector<double> radii;
  double residual = 0.0;
  bool converged = true;
  int iterations = 0;
};

// Roots of a square-free factor of positive degree.
FactorRoots aberth(const RatPoly& factor) {
  FactorRoots out;
  const RatPoly monic = factor.monic();
  const int n = monic.degree();
  if (n == 1) {
    out.roots.push_back(cplx((-monic.coeff(0)).to_double(), 0.0));
    out.radii.push_back(0.0);
    return out;
  }
  // Recenter at the root centroid exactly, then work in doubles.
  const Rational centroid = -monic.coeff(n - 1) / Rational(n);
  const RatPoly centered = monic.compose_linear(1, centroid);
  std::vector<double> c;
  for (const auto& x : centered.coeffs()) c.push_back(x.to_double());

  const double radius = std::max(cauchy_radius(c), std::numeric_limits<double>::min());
  constexpr double kRotation = 0.4;
  const double pi = std::acos(-1.0);
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = std::polar(radius, 2.0 * pi * j / n + kRotation);

  out.converged = false;
  for (int it = 1; it <= kAberthMaxIterations; ++it) {
    double max_step = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto [pv, dpv] = eval_with_derivative(c, z[static_cast<std::size_t>(j)]);
      if (pv == cplx(0.0)) continue;
      const cplx ratio = pv / dpv;
      cplx repulsion(0.0);
      for (int i = 0; i < n; ++i)
        if (i != j) repulsion += 1.0 / (z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(i)]);
      const cplx step = ratio / (1.0 - ratio * repulsion);
      z[static_cast<std::size_t>(j)] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    out.iterations = it;
    if (max_step < kAberthTolerance * radius) {
      out.converged = true;
      break;
    }
  }

  // Inclusion radii from the Weierstrass corrections.
  for (int j = 0; j < n; ++j) {
    const cplx zj = z[static_cast<std::size_t>(j)];
    cplx prod(1.0);
    for (int i = 0; i < n; ++i)
      if (i != j) prod *= zj - z[static_cast<std::size_t>(i)];
    const cplx pv = eval_with_derivative(c, zj).value;
    out.radii.push_back(prod == cplx(0.0) ? std::numeric_limits<double>::infinity() : n * std::abs(pv / prod));
    out.residual = std::max(out.residual, relative_residual(c, zj));
    out.roots.push_back(zj + centroid.to_double());
  }
  return out;
}

bool root_order(const cplx& a, const cplx& b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

}  // namespace

ComplexRootSet find_roots(const RatPoly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root finding needs degree >= 1");
  ComplexRootSet set;
  std::vector<std::pair<cplx, double>> tagged;
  for (const auto& [factor, mult] : square_free_factorization(p)) {
    const FactorRoots fr = aberth(factor);
    set.converged = set.converged && fr.converged;
    set.iterations = std::max(set.iterations, fr.iterations);
    set.residual_bound = std::max(set.residual_bound, fr.residual);
    for (std::size_t j = 0; j < fr.roots.size(); ++j)
      for (int k = 0; k < mult; ++k) tagged.emplace_back(fr.roots[j], fr.radii[j]);
  }
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return root_order(a.first, b.first); });
  for (const auto& [z, r] : tagged) {
    set.roots.push_back(z);
    set.certified_radius.push_back(r);
  }
  return set;
}

ComplexRootSet require_converged(ComplexRootSet roots) {
  if (!roots.converged)
    throw Error(ErrorCode::NonConvergence, "Aberth iteration did not converge in " +
                                               std::to_string(kAberthMaxIterations) + " iterations");
  return roots;
}

RatPoly limit_poly(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  const RatPoly half = truncate_half(generalized_eulerian(id), data.coxeter_number);
  return apply_shift(ShiftPoly(half), 1, RatPoly::monomial(1, data.rank));
}

RatPoly symmetric_limit(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  const RatPoly f = limit_poly(id) * (Rational(data.index_of_connection) / Rational(data.weyl_order));
  const Rational sign = data.rank % 2 == 0 ? Rational(1) : Rational(-1);
  return f + reflect(f, Rational(data.coxeter_number)) * sign;
}

double max_real_part(const RatPoly& p) {
  const ComplexRootSet roots = require_converged(find_roots(p));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : roots.roots) best = std::max(best, z.real());
  return best;
}

std::string_view to_string(LineMethod m) { return m == LineMethod::ExactSturm ? "exact-sturm" : "numeric"; }

LineCheckReport check_on_line_exact(const RatPoly& p, long center_times_2) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "line check of zero polynomial");
  LineCheckReport report;
  report.method = LineMethod::ExactSturm;
  report.center = Rational(BigInt(center_times_2), BigInt(2));
  const int n = p.degree();
  if (n < 1) {
    report.on_line = true;
    report.parity_ok = true;
    report.reduced = p;
    return report;
  }
  // g(s) = p(M/2 + s) must be even or odd according to its degree.
  const RatPoly g = p.compose_linear(1, report.center);
  const int eps = n % 2;
  report.parity_ok = true;
  for (int j = 0; j <= n; ++j)
    if (j % 2 != eps && !g.coeff(j).is_zero()) report.parity_ok = false;
  if (!report.parity_ok) return report;

  std::vector<Rational> reduced;
  for (int j = eps; j <= n; j += 2) reduced.push_back(g.coeff(j));
  report.reduced = RatPoly(std::move(reduced));
  if (report.reduced.degree() < 1) {
    report.on_line = true;
    return report;
  }
  report.reduced_distinct_roots = square_free_part(report.reduced).degree();
  report.reduced_nonpositive_roots = sturm_real_root_count(report.reduced, std::nullopt, Rational(0));
  report.on_line = all_roots_real_nonpositive(report.reduced);
  return report;
}

LineCheckReport check_on_line_numeric(const RatPoly& p, long center_times_2, double tolerance) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "line check of zero polynomial");
  LineCheckReport report;
  report.method = LineMethod::Numeric;
  report.center = Rational(BigInt(center_times_2), BigInt(2));
  if (p.degree() < 1) {
    report.on_line = true;
    return report;
  }
  const ComplexRootSet roots = require_converged(find_roots(p));
  report.roots = roots.roots;
  const double center = report.center.to_double();
  for (const auto& z : roots.roots) report.max_deviation = std::max(report.max_deviation, std::abs(z.real() - center));
  report.on_line = report.max_deviation <= tolerance * std::max(1.0, std::abs(center));
  return report;
}

HalfPlaneReport halfplane_exact(const RatPoly& p, long bound_times_2) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "half-plane check of zero polynomial");
  HalfPlaneReport report;
  const Rational bound(BigInt(bound_times_2), BigInt(2));
  if (p.degree() >= 1) {
    report.max_real = max_real_part(p);
    report.margin = bound.to_double() - report.max_real;
  }
  report.verdict = routh_hurwitz_all_roots_left(p.compose_linear(1, bound));
  if (report.verdict == Tristate::Inconclusive) {
    report.exact = false;
    report.verdict = report.margin > 0.0 ? Tristate::True : Tristate::False;
  }
  return report;
}

std::uint64_t bruteforce_modq(const RootSystemId& id, int m, long q, bool allow_small_q) {
  const RootSystemData data = lookup(id);
  const PositiveRootForms forms = positive_roots(id);
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "Linial parameter m must be >= 0");
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (!allow_small_q && q <= static_cast<long>(m) * data.coxeter_number)
    throw Error(ErrorCode::QTooSmall, "q must exceed m*h = " + std::to_string(static_cast<long>(m) * data.coxeter_number));

  const int l = data.rank;
  std::vector<long> x(static_cast<std::size_t>(l), 0);
  std::uint64_t count = 0;
  while (true) {
    bool avoids = true;
    for (const auto& alpha : forms.roots) {
      long v = 0;
      for (int i = 0; i < l; ++i) v += alpha[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      v %= q;
      if (v >= 1 && v <= m) {
        avoids = false;
        break;
      }
    }
    if (avoids) ++count;
    int i = 0;
    while (i < l && ++x[static_cast<std::size_t>(i)] == q) x[static_cast<std::size_t>(i++)] = 0;
    if (i == l) break;
  }
  return count;
}

double bottleneck_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "root sets differ in size");
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  if (n > 9) {
    std::vector<bool> used(n, false);
    double worst = 0.0;
    for (const auto& z : a) {
      std::size_t best = n;
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j] && (best == n || std::abs(z - b[j]) < std::abs(z - b[best]))) best = j;
      used[best] = true;
      worst = std::max(worst, std::abs(z - b[best]));
    }
    return worst;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < n && worst < best; ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<TrackPoint> asymptotic_track(const RootSystemId& id, int d, const std::vector<int>& m_list) {
  const RootSystemData data = lookup(id);
  if (d < 0 || d >= data.period)
    throw Error(ErrorCode::InvalidArgument, "residue must lie in [0, " + std::to_string(data.period) + ")");
  const auto limit_roots = require_converged(find_roots(symmetric_limit(id))).roots;
  const double half_h = data.coxeter_number / 2.0;
  std::vector<TrackPoint> out;
  for (int m : m_list) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "tracking needs m >= 1");
    const RatPoly constituent = char_quasi(id, m).constituent(d);
    // p(m t) / m^l
    const RatPoly scaled = constituent.compose_linear(m, 0) * Rational(m).pow(static_cast<unsigned>(data.rank)).inverse();
    TrackPoint pt;
    pt.m = m;
    pt.scaled_roots = require_converged(find_roots(scaled)).roots;
    pt.distance = bottleneck_distance(pt.scaled_roots, limit_roots);
    for (const auto& z : pt.scaled_roots) pt.max_real_deviation = std::max(pt.max_real_deviation, std::abs(z.real() - half_h));
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace linial

#pragma once

// Root localization for the characteristic polynomials: exact certificates
// (line membership, half-plane bounds), double-precision root finding for
// reporting, limit polynomials and the brute-force counting oracle.

#include <complex>
#include <cstdint>
#include <vector>

#include "linial/ratpoly.hpp"
#include "linial/rootdata.hpp"

namespace linial {

struct ComplexRootSet {
  std::vector<std::complex<double>> roots;  // with multiplicity, sorted by (re, im)
  double residual_bound = 0.0;              // max |p(z)| / sum |a_i| |z|^i
  std::vector<double> certified_radius;     // inclusion radius per root
  bool converged = true;
  int iterations = 0;
};

inline constexpr int kAberthMaxIterations = 200;
inline constexpr double kAberthTolerance = 1e-13;

/// Aberth-Ehrlich on each square-free factor. Deterministic start: rotated
/// roots of unity on the Cauchy radius around the root centroid. Sets
/// converged = false instead of throwing; see require_converged.
ComplexRootSet find_roots(const RatPoly& p);

/// Throws Error(NonConvergence) when the root set is flagged.
ComplexRootSet require_converged(ComplexRootSet roots);

/// F(t) = R^{1/2}(S) t^l.
RatPoly limit_poly(const RootSystemId& id);

/// F(t) + (-1)^l F(h - t) with F scaled by f/|W|: the common limit of the
/// rescaled constituents.
RatPoly symmetric_limit(const RootSystemId& id);

double max_real_part(const RatPoly& p);

enum class LineMethod { ExactSturm, Numeric };
std::string_view to_string(LineMethod m);

struct LineCheckReport {
  bool on_line = false;
  Rational center;  // M/2
  LineMethod method = LineMethod::ExactSturm;
  // exact-sturm details
  bool parity_ok = false;
  RatPoly reduced;  // G with p(M/2 + s) = s^eps G(s^2)
  int reduced_nonpositive_roots = 0;
  int reduced_distinct_roots = 0;
  // numeric details
  std::vector<std::complex<double>> roots;
  double max_deviation = 0.0;  // max |Re(root) - M/2|
};

/// Proof-grade verdict that every root of p has real part M/2.
LineCheckReport check_on_line_exact(const RatPoly& p, long center_times_2);

/// Floating-point verdict with tolerance relative to max(1, |M/2|).
LineCheckReport check_on_line_numeric(const RatPoly& p, long center_times_2, double tolerance = 1e-7);

struct HalfPlaneReport {
  Tristate verdict = Tristate::Inconclusive;
  bool exact = true;    // false when the Routh array was inconclusive
  double max_real = 0;  // numeric, always reported
  double margin = 0;    // H/2 - max_real
};

/// All roots satisfy Re < H/2, via the Routh array of p(H/2 + z); numeric
/// fallback when the array is degenerate.
HalfPlaneReport halfplane_exact(const RatPoly& p, long bound_times_2);

/// #{x in (Z/q)^l : alpha(x) mod q not in {1..m} for every positive root}.
/// Rank <= 3. Requires q > m h unless allow_small_q.
std::uint64_t bruteforce_modq(const RootSystemId& id, int m, long q, bool allow_small_q = false);

struct TrackPoint {
  int m = 0;
  double distance = 0.0;           // bottleneck matching distance to the limit roots
  double max_real_deviation = 0.0; // max |Re(root/m) - h/2|
  std::vector<std::complex<double>> scaled_roots;
};

/// Roots of the residue-d constituent of char_quasi(id, m), divided by m,
/// matched against the roots of symmetric_limit(id).
std::vector<TrackPoint> asymptotic_track(const RootSystemId& id, int d, const std::vector<int>& m_list);

/// min over bijections of max |a_i - b_pi(i)| (exhaustive up to 9 roots,
/// greedy beyond).
double bottleneck_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b);

}  // namespace linial

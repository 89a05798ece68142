#include "linial/ehrhart.hpp"

#include <numeric>

#include "linial/error.hpp"

namespace linial {

long residue(long q, long period) {
  const long r = q % period;
  return r < 0 ? r + period : r;
}

QuasiPoly::QuasiPoly(int period, std::vector<RatPoly> constituents)
    : period_(period), constituents_(std::move(constituents)) {
  if (period_ < 1 || static_cast<int>(constituents_.size()) != period_)
    throw Error(ErrorCode::InvalidArgument, "quasi-polynomial needs exactly one constituent per residue");
}

const RatPoly& QuasiPoly::constituent(long d) const {
  return constituents_[static_cast<std::size_t>(residue(d, period_))];
}

Rational QuasiPoly::value(long q) const { return constituent(q)(Rational(q)); }

Rational QuasiPoly::value(const BigInt& q) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(period_));
  return constituents_[r.get_ui()](Rational(q));
}

RatPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  RatPoly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatPoly basis = RatPoly::constant(1);
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * RatPoly::linear_factor(points[j].first);
      denom *= points[i].first - points[j].first;
    }
    acc += basis * (points[i].second / denom);
  }
  return acc;
}

namespace {

// Denumerant counts #{m in Z_{>=0}^{l+1} : sum c_i m_i = q} for q = 0..n-1,
// by successive prefix sums over each mark.
std::vector<BigInt> denumerants(const std::vector<int>& marks, int n) {
  std::vector<BigInt> a(static_cast<std::size_t>(n), 0);
  a[0] = 1;
  for (int c : marks)
    for (int q = c; q < n; ++q) a[static_cast<std::size_t>(q)] += a[static_cast<std::size_t>(q - c)];
  return a;
}

}  // namespace

QuasiPoly ehrhart_qp(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  const int period = data.period;
  const int l = data.rank;
  const int verify_limit = 3 * period * (l + 1);
  const auto counts = denumerants(data.marks, verify_limit + 1);

  std::vector<RatPoly> constituents;
  for (int d = 0; d < period; ++d) {
    std::vector<std::pair<Rational, Rational>> samples;
    for (int j = 0; j <= l; ++j) {
      const int q = d + j * period;
      samples.emplace_back(Rational(q), Rational(counts[static_cast<std::size_t>(q)]));
    }
    RatPoly p = interpolate(samples);
    for (int q = d; q <= verify_limit; q += period)
      if (p(Rational(q)) != Rational(counts[static_cast<std::size_t>(q)]))
        throw Error(ErrorCode::Internal, "Ehrhart interpolant disagrees with lattice count at q=" +
                                             std::to_string(q) + " for " + id.name());
    constituents.push_back(std::move(p));
  }
  return QuasiPoly(period, std::move(constituents));
}

std::vector<BigInt> series_coeffs(const RootSystemId& id, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "series length must be positive");
  const RootSystemData data = lookup(id);
  // Denominator prod (1 - z^c), truncated at degree n-1.
  std::vector<BigInt> den(static_cast<std::size_t>(n), 0);
  den[0] = 1;
  for (int c : data.marks)
    for (int q = n - 1; q >= c; --q) den[static_cast<std::size_t>(q)] -= den[static_cast<std::size_t>(q - c)];
  // den[0] = 1, so b_q = -sum_{k=1}^{q} den_k b_{q-k}.
  std::vector<BigInt> out(static_cast<std::size_t>(n), 0);
  out[0] = 1;
  for (int q = 1; q < n; ++q) {
    BigInt acc = 0;
    for (int k = 1; k <= q; ++k) acc -= den[static_cast<std::size_t>(k)] * out[static_cast<std::size_t>(q - k)];
    out[static_cast<std::size_t>(q)] = acc;
  }
  return out;
}

bool check_reciprocity(const QuasiPoly& l, int rank, int coxeter_number) {
  const Rational sign = rank % 2 == 0 ? Rational(1) : Rational(-1);
  const Rational h(coxeter_number);
  for (int d = 0; d < l.period(); ++d) {
    const RatPoly lhs = l.constituent(-d).compose_linear(-1, 0);
    const RatPoly rhs = l.constituent(d - coxeter_number).shifted(h) * sign;
    if (lhs != rhs) return false;
  }
  return true;
}

QuasiPoly apply_shift_qp(const ShiftPoly& f, int k, const QuasiPoly& l) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "shift step must be positive");
  std::vector<RatPoly> out;
  out.reserve(static_cast<std::size_t>(l.period()));
  for (int d = 0; d < l.period(); ++d) {
    RatPoly acc;
    for (int i = 0; i <= f.degree(); ++i) {
      const Rational& fi = f.coeffs()[static_cast<std::size_t>(i)];
      if (fi.is_zero()) continue;
      const long step = static_cast<long>(k) * i;
      acc += l.constituent(d - step).shifted(Rational(step)) * fi;
    }
    out.push_back(std::move(acc));
  }
  return QuasiPoly(l.period(), std::move(out));
}

GcdPropertyReport gcd_property(const QuasiPoly& l) {
  const int n = l.period();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::gcd(i, n) == std::gcd(j, n) && l.constituents()[static_cast<std::size_t>(i)] != l.constituents()[static_cast<std::size_t>(j)])
        return {false, std::make_pair(i, j)};
  return {};
}

}  // namespace linial

#include "linial/ratpoly.hpp"

#include <algorithm>
#include <sstream>

#include "linial/error.hpp"

namespace linial {

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  }
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::pow(unsigned exponent) const {
  Rational r(1);
  Rational base = *this;
  while (exponent) {
    if (exponent & 1u) r *= base;
    base *= base;
    exponent >>= 1u;
  }
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

// ----------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_factor(const Rational& root) { return RatPoly({-root, Rational(1)}); }

RatPoly RatPoly::from_roots(const std::vector<Rational>& roots) {
  RatPoly p = constant(1);
  for (const auto& r : roots) p = p * linear_factor(r);
  return p;
}

Rational RatPoly::coeff(int j) const {
  if (j < 0 || j > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(j)];
}

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> RatPoly::operator()(std::complex<double> z) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * Rational(static_cast<long>(j));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

RatPoly RatPoly::compose_linear(const Rational& a, const Rational& b) const {
  if (a.is_zero()) return constant((*this)(b));
  // Taylor shift p(t + b) by repeated synthetic division, then scale t -> a*t.
  std::vector<Rational> c = coeffs_;
  const int n = degree();
  if (!b.is_zero())
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += b * c[static_cast<std::size_t>(j + 1)];
  if (a != Rational(1)) {
    Rational scale(1);
    for (auto& x : c) {
      x *= scale;
      scale *= a;
    }
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::reversed(int deg) const {
  if (deg < degree()) throw Error(ErrorCode::DegreeMismatch, "reversal degree below polynomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= degree(); ++j) v[static_cast<std::size_t>(deg - j)] = coeffs_[static_cast<std::size_t>(j)];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::truncated(int n) const {
  if (n <= 0) return {};
  const auto keep = std::min<std::size_t>(coeffs_.size(), static_cast<std::size_t>(n));
  return RatPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(v));
}

std::string RatPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const Rational& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1);
    if (j == 0) {
      out << mag.str();
    } else {
      if (!unit) out << mag.str() << "*";
      out << var;
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  return out.str();
}

// --------------------------------------------------------------- ShiftPoly

ShiftPoly ShiftPoly::power_substituted(int k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "shift step must be positive");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree() * k) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(i * k)] = coeffs()[static_cast<std::size_t>(i)];
  return ShiftPoly(RatPoly(std::move(v)));
}

// ------------------------------------------------------------- algorithms

DivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = b.leading().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatPoly square_free_part(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free part of zero polynomial");
  if (p.degree() < 1) return RatPoly::constant(1);
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

std::vector<SquareFreeFactor> square_free_factorization(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() < 1) return out;
  const RatPoly dp = p.derivative();
  RatPoly a = gcd(p, dp);
  RatPoly b = divmod(p, a).quotient;
  RatPoly c = divmod(dp, a).quotient;
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const RatPoly g = gcd(b, d);
    if (g.degree() >= 1) out.push_back({g, i});
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
  }
  return out;
}

RatPoly apply_shift(const ShiftPoly& f, int k, const RatPoly& g) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "shift step must be positive");
  RatPoly acc;
  for (int i = 0; i <= f.degree(); ++i) {
    const Rational& fi = f.coeffs()[static_cast<std::size_t>(i)];
    if (fi.is_zero()) continue;
    acc += g.shifted(Rational(static_cast<long>(k) * i)) * fi;
  }
  return acc;
}

RatPoly reflect(const RatPoly& g, const Rational& center_sum) { return g.compose_linear(-1, center_sum); }

namespace {

int sign_at(const RatPoly& p, const std::optional<Rational>& x, bool at_plus_infinity) {
  if (p.is_zero()) return 0;
  if (x) return p(*x).sign();
  const int lead = p.leading().sign();
  if (at_plus_infinity || p.degree() % 2 == 0) return lead;
  return -lead;
}

int sign_variations(const std::vector<RatPoly>& seq, const std::optional<Rational>& x, bool plus_inf) {
  int changes = 0;
  int prev = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, x, plus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RatPoly r = -divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    // Positive rescaling keeps every sign intact.
    seq.push_back(r * r.leading().abs().inverse());
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

}  // namespace

int sturm_real_root_count(const RatPoly& p, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm count of zero polynomial");
  if (lo && hi && *hi <= *lo) return 0;
  const RatPoly sf = square_free_part(p);
  if (sf.degree() < 1) return 0;
  const auto seq = sturm_sequence(sf);
  return sign_variations(seq, lo, false) - sign_variations(seq, hi, true);
}

bool all_roots_real_nonpositive(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root test on zero polynomial");
  for (const auto& [factor, mult] : square_free_factorization(p)) {
    (void)mult;
    if (sturm_real_root_count(factor, std::nullopt, Rational(0)) != factor.degree()) return false;
  }
  return true;
}

std::string_view to_string(Tristate v) {
  switch (v) {
    case Tristate::True: return "true";
    case Tristate::False: return "false";
    case Tristate::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Tristate routh_hurwitz_all_roots_left(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Routh test on zero polynomial");
  const int n = p.degree();
  if (n == 0) return Tristate::True;

  // Stable polynomials have all coefficients nonzero of one sign; a strict
  // sign disagreement already decides the question.
  int seen = 0;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    if (seen != 0 && c.sign() != seen) return Tristate::False;
    seen = c.sign();
  }

  std::vector<std::vector<Rational>> rows(2);
  for (int j = n; j >= 0; j -= 2) rows[0].push_back(p.coeff(j));
  for (int j = n - 1; j >= 0; j -= 2) rows[1].push_back(p.coeff(j));

  auto at = [](const std::vector<Rational>& r, std::size_t j) { return j < r.size() ? r[j] : Rational(0); };

  int changes = 0;
  int prev_sign = rows[0][0].sign();
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows.size()) <= i) {
      const auto& r1 = rows[static_cast<std::size_t>(i - 1)];
      const auto& r2 = rows[static_cast<std::size_t>(i - 2)];
      std::vector<Rational> next;
      const std::size_t width = std::max(r2.size(), r1.size());
      for (std::size_t j = 0; j + 1 < width; ++j)
        next.push_back((r1[0] * at(r2, j + 1) - r2[0] * at(r1, j + 1)) / r1[0]);
      rows.push_back(std::move(next));
    }
    const Rational pivot = at(rows[static_cast<std::size_t>(i)], 0);
    if (pivot.is_zero()) return changes > 0 ? Tristate::False : Tristate::Inconclusive;
    if (pivot.sign() != prev_sign) ++changes;
    prev_sign = pivot.sign();
  }
  return changes == 0 ? Tristate::True : Tristate::False;
}

}  // namespace linial

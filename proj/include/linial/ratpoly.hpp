#pragma once

// Exact rationals, dense univariate polynomials over Q, the shift-operator
// calculus, and exact real-root counting (Sturm, Routh-Hurwitz).

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linial {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "n" or "n/d" with decimal integers.
  static Rational parse(const std::string& text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  std::string str() const { return value_.get_str(); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Dense polynomial over Q; coeffs()[j] multiplies t^j. The zero polynomial
/// has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  /// t - root
  static RatPoly linear_factor(const Rational& root);
  /// Product of (t - r) over the given roots.
  static RatPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^j; zero beyond the degree.
  Rational coeff(int j) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  RatPoly derivative() const;
  RatPoly monic() const;
  /// p(a*t + b)
  RatPoly compose_linear(const Rational& a, const Rational& b) const;
  /// p(t - c)
  RatPoly shifted(const Rational& c) const { return compose_linear(1, -c); }
  /// t^deg * p(1/t) with deg the stated degree.
  RatPoly reversed(int deg) const;
  /// Keeps terms of index < n.
  RatPoly truncated(int n) const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// Descending-power text such as "t^2 - 6*t + 11".
  std::string to_string(char var = 't') const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// Polynomial in the shift operator S; coefficient i multiplies S^i and S
/// acts by g(t) -> g(t - 1).
class ShiftPoly {
 public:
  ShiftPoly() = default;
  explicit ShiftPoly(RatPoly coeffs) : coeffs_(std::move(coeffs)) {}
  explicit ShiftPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  const RatPoly& as_poly() const { return coeffs_; }
  const std::vector<Rational>& coeffs() const { return coeffs_.coeffs(); }
  int degree() const { return coeffs_.degree(); }
  bool is_zero() const { return coeffs_.is_zero(); }

  /// f(S^k) as a polynomial in S.
  ShiftPoly power_substituted(int k) const;

  friend bool operator==(const ShiftPoly&, const ShiftPoly&) = default;

 private:
  RatPoly coeffs_;
};

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};

DivMod divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly square_free_part(const RatPoly& p);

struct SquareFreeFactor {
  RatPoly factor;  // monic, square-free
  int multiplicity;
};
/// Yun's algorithm; factors of positive degree with pairwise coprime bases.
std::vector<SquareFreeFactor> square_free_factorization(const RatPoly& p);

/// Sum_i f_i * g(t - k*i).
RatPoly apply_shift(const ShiftPoly& f, int k, const RatPoly& g);

/// g(M - t)
RatPoly reflect(const RatPoly& g, const Rational& center_sum);

/// Distinct real roots of p in (lo, hi]; nullopt bounds stand for -inf/+inf.
int sturm_real_root_count(const RatPoly& p, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi);

/// Every complex root of p is real and <= 0.
bool all_roots_real_nonpositive(const RatPoly& p);

enum class Tristate { False, True, Inconclusive };
std::string_view to_string(Tristate v);

/// Exact Routh array over Q: true iff every root has negative real part.
/// Inconclusive whenever a zero pivot appears before a sign change.
Tristate routh_hurwitz_all_roots_left(const RatPoly& p);

}  // namespace linial

#include <gtest/gtest.h>

#include "linial/arrangement.hpp"
#include "linial/error.hpp"
#include "linial/rootdata.hpp"
#include "linial/verify.hpp"
#include "test_util.hpp"

using namespace linial;

namespace {

RootSystemId id(const char* s) { return RootSystemId::parse(s); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(CharQuasi, G2MOne) {
  const QuasiPoly chi = char_quasi(id("G2"), 1);
  for (long d = 0; d < 6; ++d) EXPECT_EQ(chi.constituent(d), d % 2 ? P({11, -6, 1}) : P({14, -6, 1})) << d;
  EXPECT_EQ(char_poly(id("G2"), 1), P({11, -6, 1}));
}

TEST(CharQuasi, MZeroIsPower) {
  for (const auto& rid : supported_catalog()) {
    const auto d = lookup(rid);
    const QuasiPoly chi = char_quasi(rid, 0);
    for (const auto& c : chi.constituents()) EXPECT_EQ(c, RatPoly::monomial(1, d.rank)) << rid.name();
  }
}

TEST(CharQuasi, MonicIntegerConstituents) {
  for (const auto& rid : exceptional_ids())
    for (int m = 1; m <= 3; ++m) {
      const auto d = lookup(rid);
      const QuasiPoly chi = char_quasi(rid, m);
      for (const auto& c : chi.constituents()) {
        EXPECT_EQ(c.degree(), d.rank);
        EXPECT_EQ(c.leading(), Rational(1));
        for (const auto& a : c.coeffs()) EXPECT_TRUE(a.is_integer()) << rid.name() << " m=" << m;
      }
    }
}

TEST(CharQuasi, MatchesBruteForce) {
  EXPECT_EQ(char_quasi(id("G2"), 2).value(100L), Rational(BigInt(bruteforce_modq(id("G2"), 2, 100))));
  for (const char* name : {"A2", "B2", "C2", "A3", "B3"})
    for (int m = 0; m <= 2; ++m) {
      const auto d = lookup(id(name));
      const long q = static_cast<long>(m) * d.coxeter_number + 1 + (m % 2);
      EXPECT_EQ(char_quasi(id(name), m).value(q), Rational(BigInt(bruteforce_modq(id(name), m, q)))) << name << m;
    }
}

TEST(CharQuasi, NegativeM) { EXPECT_EQ(code_of([] { char_quasi(id("G2"), -1); }), ErrorCode::InvalidArgument); }

TEST(HalfCharQuasi, G2Example) {
  const QuasiPoly half = half_char_quasi(id("G2"), 1);
  const long c[] = {12, 5, 10, 3, 14, 1};
  for (long d = 0; d < 6; ++d) EXPECT_EQ(half.constituent(d), P({c[d], -8, 3}, 6)) << d;
}

TEST(HalfCharQuasi, GcdPropertyFails) {
  // The half quasi-polynomial need not inherit the GCD-property.
  EXPECT_FALSE(gcd_property(half_char_quasi(id("G2"), 1)).holds);
}

TEST(WeylCharQuasi, Examples) {
  const QuasiPoly w = weyl_char_quasi(id("G2"));
  EXPECT_EQ(w.constituent(1), RatPoly::from_roots({1, 5}));
  EXPECT_EQ(w.constituent(3), RatPoly::from_roots({3, 3}));
  EXPECT_EQ(w.constituent(0), P({12, -6, 1}));
  EXPECT_EQ(weyl_char_quasi(id("A2")).constituent(0), RatPoly::from_roots({1, 2}));
  for (const auto& rid : supported_catalog()) EXPECT_EQ(weyl_char_quasi(rid).constituent(1).leading(), Rational(1));
}

TEST(Admissible, TableValues) {
  const auto e7 = admissible_residues(id("E7"));
  EXPECT_EQ(e7.divisors, (std::vector<int>{1, 3}));
  EXPECT_EQ(e7.m0, 2);
  const auto e8 = admissible_residues(id("E8"));
  EXPECT_EQ(e8.divisors, (std::vector<int>{1, 3, 5, 15}));
  EXPECT_EQ(e8.m0, 2);
  const auto f4 = admissible_residues(id("F4"));
  EXPECT_EQ(f4.divisors, (std::vector<int>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(f4.m0, 1);
  const auto g2 = admissible_residues(id("G2"));
  EXPECT_EQ(g2.residues, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(g2.divisors, (std::vector<int>{1, 2, 3, 6}));
}

TEST(AveragedHalf, IdentityHolds) {
  for (const auto& [name, m] : std::vector<std::pair<const char*, int>>{{"G2", 1}, {"E6", 5}, {"F4", 2}, {"E7", 1}}) {
    const auto d = lookup(id(name));
    const QuasiPoly chi = char_quasi(id(name), m);
    for (int r : admissible_residues(id(name)).residues) {
      const RatPoly f = averaged_half(id(name), m, r);
      RatPoly mirror = reflect(f, m * d.coxeter_number);
      if (d.rank % 2) mirror = -mirror;
      EXPECT_EQ(f + mirror, chi.constituent(r)) << name << " d=" << r;
    }
  }
}

TEST(AveragedHalf, TypeAIsHalfConstituent) {
  EXPECT_EQ(averaged_half(id("A4"), 2, 1), half_char_quasi(id("A4"), 2).constituent(1));
}

TEST(AveragedHalf, NotAdmissible) {
  // E7: residue 2 has gcd 2 with period 12 but 2+h=20 has gcd 4.
  const auto adm = admissible_residues(id("E7"));
  ASSERT_EQ(std::count(adm.residues.begin(), adm.residues.end(), 2), 0);
  EXPECT_EQ(code_of([] { averaged_half(id("E7"), 1, 2); }), ErrorCode::NotAdmissible);
}

TEST(Toy, DefaultSeed) {
  EXPECT_EQ(default_toy_seed(id("E6")), RatPoly::from_roots({-1, -4, -5, -7, -8, -11}));
  const auto d = lookup(id("E6"));
  const RatPoly t0 = toy_poly(id("E6"), 0);
  EXPECT_EQ(t0.degree(), 6);
  EXPECT_EQ(t0.leading(), Rational(d.weyl_order) / Rational(d.index_of_connection));
}

TEST(Toy, RootsOnLine) {
  for (const auto& rid : exceptional_ids()) {
    const auto d = lookup(rid);
    for (int m = 1; m <= 4; ++m)
      EXPECT_TRUE(check_on_line_exact(toy_poly(rid, m), static_cast<long>(m) * d.coxeter_number).on_line)
          << rid.name() << " m=" << m;
  }
}

TEST(Toy, SymmetryViolation) {
  EXPECT_EQ(code_of([] { toy_poly(id("G2"), 1, P({1, 1, 1})); }), ErrorCode::SymmetryViolation);
  EXPECT_EQ(code_of([] { toy_poly(id("G2"), 1, P({1, 1})); }), ErrorCode::SymmetryViolation);
}

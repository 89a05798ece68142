#include <gtest/gtest.h>

#include "linial/ehrhart.hpp"
#include "linial/error.hpp"
#include "linial/eulerian.hpp"
#include "linial/rootdata.hpp"
#include "test_util.hpp"

using namespace linial;

namespace {

RootSystemId id(const char* s) { return RootSystemId::parse(s); }

}  // namespace

TEST(Classical, Examples) {
  EXPECT_EQ(classical_eulerian(1), P({0, 1}));
  EXPECT_EQ(classical_eulerian(2), P({0, 1, 1}));
  EXPECT_EQ(classical_eulerian(6), P({0, 1, 57, 302, 302, 57, 1}));
  EXPECT_THROW(classical_eulerian(0), Error);
}

TEST(Generalized, Examples) {
  EXPECT_EQ(generalized_eulerian(id("G2")), P({0, 1, 3, 4, 3, 1}));
  EXPECT_EQ(generalized_eulerian(id("E6")), P({0, 1, 61, 537, 1916, 3782, 4686, 3782, 1916, 537, 61, 1}));
  for (int l = 1; l <= 8; ++l) EXPECT_EQ(generalized_eulerian(RootSystemId::make(Family::A, l)), classical_eulerian(l));
}

TEST(Generalized, Properties) {
  for (const auto& rid : supported_catalog()) {
    const auto d = lookup(rid);
    const RatPoly r = generalized_eulerian(rid);
    EXPECT_EQ(r.degree(), d.coxeter_number - 1) << rid.name();
    EXPECT_EQ(r(Rational(1)), Rational(d.weyl_order) / Rational(d.index_of_connection)) << rid.name();
    // Palindromic about h/2: x^h R(1/x) = R(x).
    EXPECT_EQ(r.reversed(d.coxeter_number), r) << rid.name();
  }
}

TEST(Generalized, SeriesIdentity) {
  // R(x) * sum_q L(q) x^q = sum_q q^l x^q, compared on the first N coefficients.
  constexpr int kN = 50;
  for (const auto& rid : exceptional_ids()) {
    const auto d = lookup(rid);
    const auto series = series_coeffs(rid, kN);
    const RatPoly r = generalized_eulerian(rid);
    for (int q = 0; q < kN; ++q) {
      Rational acc(0);
      for (int i = 0; i <= std::min(q, r.degree()); ++i) acc += r.coeff(i) * Rational(series[static_cast<std::size_t>(q - i)]);
      EXPECT_EQ(acc, Rational(q).pow(static_cast<unsigned>(d.rank))) << rid.name() << " q=" << q;
    }
  }
}

TEST(TruncateHalf, Examples) {
  EXPECT_EQ(truncate_half(generalized_eulerian(id("G2")), 6), P({0, 1, 3, 2}));
  EXPECT_EQ(truncate_half(generalized_eulerian(id("E6")), 12), P({0, 1, 61, 537, 1916, 3782, 2343}));
  EXPECT_EQ(truncate_half(P({0, 1, 1}), 3), P({0, 1}));
}

TEST(TruncateHalf, HalvesTheTotal) {
  for (const auto& rid : supported_catalog()) {
    const auto d = lookup(rid);
    const RatPoly r = generalized_eulerian(rid);
    EXPECT_EQ(truncate_half(r, d.coxeter_number)(Rational(1)) * 2, r(Rational(1))) << rid.name();
  }
}

TEST(TruncateHalf, DegreeMismatch) {
  try {
    truncate_half(P({0, 1, 1}), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
}

TEST(AscOracle, MatchesProductFormula) {
  for (const char* name : {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"})
    EXPECT_EQ(asc_oracle(id(name)), generalized_eulerian(id(name))) << name;
}

TEST(AscOracle, RankTooLarge) { EXPECT_THROW(asc_oracle(id("F4")), Error); }

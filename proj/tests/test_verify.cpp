#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "linial/arrangement.hpp"
#include "linial/error.hpp"
#include "linial/rootdata.hpp"
#include "linial/verify.hpp"
#include "test_util.hpp"

using namespace linial;

namespace {

RootSystemId id(const char* s) { return RootSystemId::parse(s); }

bool has_root(const ComplexRootSet& set, std::complex<double> z, double tol) {
  for (const auto& r : set.roots)
    if (std::abs(r - z) < tol) return true;
  return false;
}

}  // namespace

TEST(FindRoots, Quadratics) {
  const auto a = find_roots(P({11, -6, 1}));
  ASSERT_EQ(a.roots.size(), 2u);
  EXPECT_TRUE(has_root(a, {3, std::sqrt(2.0)}, 1e-10));
  EXPECT_TRUE(has_root(a, {3, -std::sqrt(2.0)}, 1e-10));
  const auto b = find_roots(P({31, -26, 6}));
  EXPECT_TRUE(has_root(b, {13.0 / 6, std::sqrt(17.0) / 6}, 1e-10));
  EXPECT_LT(b.residual_bound, 1e-9);
}

TEST(FindRoots, E6Limit) {
  const auto r = require_converged(find_roots(limit_poly(id("E6"))));
  for (auto z : {std::complex<double>(4.55334, 0.465487), std::complex<double>(4.78675, 1.55735),
                 std::complex<double>(5.37033, 3.11072)}) {
    EXPECT_TRUE(has_root(r, z, 1e-4));
    EXPECT_TRUE(has_root(r, std::conj(z), 1e-4));
  }
}

TEST(FindRoots, RepeatedRootsAndResidual) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> root(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> roots;
    for (int i = 0; i < 7; ++i) roots.emplace_back(root(rng));
    const RatPoly p = RatPoly::from_roots(roots) * P({5, 2, 1});
    const auto r = require_converged(find_roots(p));
    ASSERT_EQ(static_cast<int>(r.roots.size()), p.degree());
    EXPECT_LT(r.residual_bound, 1e-9);
    for (const auto& x : roots) EXPECT_TRUE(has_root(r, {x.to_double(), 0}, 1e-6));
  }
}

TEST(FindRoots, RootAtCentroid) {
  // Recentering puts a root at the origin; the start circle must not collapse.
  const RatPoly p = RatPoly::from_roots({-2, 0, 2}) * P({5, 2, 1}) * RatPoly::linear_factor(-2) * RatPoly::linear_factor(4);
  const auto r = find_roots(p);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(has_root(r, {0, 0}, 1e-9));
  EXPECT_TRUE(has_root(r, {-1, 2}, 1e-9));
}

TEST(FindRoots, ZeroPolynomial) { EXPECT_THROW(find_roots(RatPoly()), Error); }

TEST(LimitPoly, Examples) {
  EXPECT_EQ(limit_poly(id("G2")), P({31, -26, 6}));
  RatPoly e6;
  const long c[] = {1, 61, 537, 1916, 3782, 2343};
  for (int i = 0; i < 6; ++i) e6 += RatPoly::from_roots(std::vector<Rational>(6, Rational(i + 1))) * Rational(c[i]);
  EXPECT_EQ(limit_poly(id("E6")), e6);
}

TEST(MaxRealPart, TableValues) {
  EXPECT_NEAR(max_real_part(limit_poly(id("E8"))), 14.6604, 1e-3);
  EXPECT_NEAR(max_real_part(limit_poly(id("F4"))), 4.8967, 1e-3);
  EXPECT_NEAR(max_real_part(limit_poly(id("E7"))), 8.4367, 1e-3);
  EXPECT_NEAR(max_real_part(limit_poly(id("G2"))), 13.0 / 6, 1e-9);
}

TEST(CheckLine, Examples) {
  const auto yes = check_on_line_exact(P({11, -6, 1}), 6);
  EXPECT_TRUE(yes.on_line);
  EXPECT_EQ(yes.reduced, P({2, 1}));
  EXPECT_FALSE(check_on_line_exact(P({8, -6, 1}), 6).on_line);
  EXPECT_TRUE(check_on_line_exact(P({7}), 0).on_line);
  for (int m = 1; m <= 30; ++m) EXPECT_TRUE(check_on_line_exact(char_poly(id("G2"), m), 6L * m).on_line) << m;
}

TEST(CheckLine, PlantedLineAndMutation) {
  // prod (t - c - i b_j)(t - c + i b_j) has every root on Re t = c.
  std::mt19937 rng(37);
  std::uniform_int_distribution<long> b(0, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const long center2 = trial - 10;
    const Rational c(center2, 2);
    RatPoly p = RatPoly::constant(1);
    for (int j = 0; j < 3; ++j) {
      const Rational bj(b(rng));
      // (t - c)^2 + b^2
      p = p * (RatPoly::from_roots({c, c}) + RatPoly::constant(bj * bj));
    }
    if (trial % 2) p = p * RatPoly::linear_factor(c);
    EXPECT_TRUE(check_on_line_exact(p, center2).on_line);
    EXPECT_TRUE(check_on_line_numeric(p, center2, 1e-5).on_line);
    RatPoly mutated = p + RatPoly::monomial(1, 1);
    EXPECT_FALSE(check_on_line_exact(mutated, center2).on_line);
  }
}

TEST(CheckLine, ParityFailureReported) {
  const auto r = check_on_line_exact(P({1, 1, 1}), 6);
  EXPECT_FALSE(r.on_line);
  EXPECT_FALSE(r.parity_ok);
  EXPECT_THROW(check_on_line_exact(RatPoly(), 0), Error);
}

TEST(HalfPlane, Examples) {
  const auto g2 = halfplane_exact(limit_poly(id("G2")), 6);
  EXPECT_EQ(g2.verdict, Tristate::True);
  EXPECT_TRUE(g2.exact);
  EXPECT_EQ(halfplane_exact(limit_poly(id("E6")), 12).verdict, Tristate::True);
  EXPECT_EQ(halfplane_exact(P({-4, 1}), 6).verdict, Tristate::False);
}

TEST(BruteForce, G2) {
  for (long q : {7L, 9L, 13L, 15L}) EXPECT_EQ(bruteforce_modq(id("G2"), 1, q), static_cast<std::uint64_t>(q * q - 6 * q + 11));
  for (long q : {8L, 10L, 14L}) EXPECT_EQ(bruteforce_modq(id("G2"), 1, q), static_cast<std::uint64_t>(q * q - 6 * q + 14));
  EXPECT_EQ(bruteforce_modq(id("G2"), 0, 5), 25u);
}

TEST(BruteForce, QTooSmall) {
  try {
    bruteforce_modq(id("G2"), 1, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QTooSmall);
  }
  EXPECT_NO_THROW(bruteforce_modq(id("G2"), 1, 6, true));
  EXPECT_THROW(bruteforce_modq(id("E6"), 1, 20), Error);
}

TEST(Track, DistancesShrink) {
  const auto g2 = asymptotic_track(id("G2"), 1, {1, 10, 100});
  ASSERT_EQ(g2.size(), 3u);
  EXPECT_GT(g2[0].distance, g2[1].distance);
  EXPECT_GT(g2[1].distance, g2[2].distance);
  const auto e6 = asymptotic_track(id("E6"), 1, {1000});
  EXPECT_LT(e6[0].max_real_deviation, 0.05);
}

TEST(Track, SymmetricLimitOnLine) {
  for (const auto& rid : exceptional_ids()) {
    const auto d = lookup(rid);
    EXPECT_TRUE(check_on_line_exact(symmetric_limit(rid), d.coxeter_number).on_line) << rid.name();
  }
}

TEST(Bottleneck, Basic) {
  using C = std::complex<double>;
  EXPECT_DOUBLE_EQ(bottleneck_distance({C(0, 0), C(1, 0)}, {C(1, 0), C(0, 0.5)}), 0.5);
  EXPECT_THROW(bottleneck_distance({C(0, 0)}, {}), Error);
}

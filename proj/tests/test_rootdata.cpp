#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "linial/error.hpp"
#include "linial/rootdata.hpp"

using namespace linial;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Lookup, E8) {
  const auto d = lookup(RootSystemId::parse("E8"));
  EXPECT_EQ(d.exponents, (std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(d.marks, (std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6}));
  EXPECT_EQ(d.coxeter_number, 30);
  EXPECT_EQ(d.index_of_connection, 1);
  EXPECT_EQ(d.period, 60);
  EXPECT_EQ(d.rad_period, 30);
  EXPECT_EQ(d.weyl_order, BigInt("696729600"));
}

TEST(Lookup, G2) {
  const auto d = lookup(RootSystemId::parse("G2"));
  EXPECT_EQ(d.exponents, (std::vector<int>{1, 5}));
  EXPECT_EQ(d.marks, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(d.coxeter_number, 6);
  EXPECT_EQ(d.weyl_order, 12);
  EXPECT_EQ(d.period, 6);
}

TEST(Lookup, A3) {
  const auto d = lookup(RootSystemId::parse("A3"));
  EXPECT_EQ(d.exponents, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(d.marks, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(d.coxeter_number, 4);
  EXPECT_EQ(d.index_of_connection, 4);
  EXPECT_EQ(d.period, 1);
}

TEST(Lookup, ClassicalClosedForms) {
  const auto b = lookup(RootSystemId::parse("B5"));
  EXPECT_EQ(b.exponents, (std::vector<int>{1, 3, 5, 7, 9}));
  EXPECT_EQ(b.marks, (std::vector<int>{1, 1, 2, 2, 2, 2}));
  const auto e6 = lookup(RootSystemId::parse("E6"));
  EXPECT_EQ(e6.period, 6);  // lcm of 1,1,2,2,2,3
}

TEST(Lookup, Invariants) {
  // sum of exponents = number of positive roots = l*h/2; prod(e_i + 1) = |W|.
  for (const auto& id : supported_catalog()) {
    const auto d = lookup(id);
    long sum = 0;
    BigInt prod = 1;
    for (int e : d.exponents) {
      sum += e;
      prod *= e + 1;
    }
    EXPECT_EQ(2 * sum, static_cast<long>(d.rank) * d.coxeter_number) << id.name();
    EXPECT_EQ(prod, d.weyl_order) << id.name();
    long marks = 0;
    for (int c : d.marks) marks += c;
    EXPECT_EQ(marks, d.coxeter_number) << id.name();
  }
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of([] { RootSystemId::parse("X3"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { RootSystemId::parse("B1"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of([] { RootSystemId::parse("A0"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of([] { RootSystemId::parse("A99"); }), ErrorCode::InvalidRank);
  EXPECT_EQ(RootSystemId::parse("D5").name(), "D5");
}

TEST(Lookup, D3IsA3) {
  const auto d3 = lookup(RootSystemId::parse("D3"));
  const auto a3 = lookup(RootSystemId::parse("A3"));
  EXPECT_EQ(d3.exponents, a3.exponents);
  EXPECT_EQ(d3.marks, a3.marks);
}

class PositiveRoots : public ::testing::TestWithParam<const char*> {};

TEST_P(PositiveRoots, CountAndClosure) {
  const auto id = RootSystemId::parse(GetParam());
  const auto data = lookup(id);
  const auto forms = positive_roots(id);
  EXPECT_EQ(static_cast<int>(forms.roots.size()), data.rank * data.coxeter_number / 2);
  std::set<std::vector<int>> all(forms.roots.begin(), forms.roots.end());
  for (const auto& r : forms.roots) {
    std::vector<int> neg(r.size());
    std::transform(r.begin(), r.end(), neg.begin(), [](int x) { return -x; });
    all.insert(neg);
  }
  for (const auto& r : all)
    for (int i = 0; i < data.rank; ++i) EXPECT_TRUE(all.count(simple_reflection(forms, i, r))) << GetParam();
  const std::vector<int> marks(data.marks.begin() + 1, data.marks.end());
  std::vector<int> highest = forms.highest;
  std::sort(highest.begin(), highest.end());
  EXPECT_EQ(highest, marks);
}

INSTANTIATE_TEST_SUITE_P(Rank2And3, PositiveRoots, ::testing::Values("A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"));

TEST(PositiveRootsExamples, A2B2G2) {
  using V = std::vector<std::vector<int>>;
  auto sorted = [](V v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(positive_roots(RootSystemId::parse("A2")).roots), sorted(V{{1, 0}, {0, 1}, {1, 1}}));
  const auto b2 = positive_roots(RootSystemId::parse("B2"));
  EXPECT_EQ(sorted(b2.roots), sorted(V{{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(b2.highest, (std::vector<int>{2, 1}));
  EXPECT_EQ(positive_roots(RootSystemId::parse("G2")).highest, (std::vector<int>{3, 2}));
}

TEST(PositiveRootsExamples, HighRankUnsupported) {
  EXPECT_EQ(code_of([] { positive_roots(RootSystemId::parse("E6")); }), ErrorCode::UnsupportedRank);
  EXPECT_EQ(code_of([] { positive_roots(RootSystemId::parse("A4")); }), ErrorCode::UnsupportedRank);
}

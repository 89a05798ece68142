#include <gtest/gtest.h>

#include <cstring>
#include <memory>
#include <string>

#include "json.hpp"
#include "linial/linial.h"

namespace {

using Json = nlohmann::json;

std::string take(char* s) {
  std::string out(s);
  lnl_string_free(s);
  return out;
}

struct Rs {
  lnl_root_system* p = nullptr;
  explicit Rs(const char* name) { EXPECT_EQ(lnl_root_system_parse(name, &p), LNL_OK); }
  ~Rs() { lnl_root_system_free(p); }
};

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(lnl_status_name(LNL_OK), "Ok");
  EXPECT_STREQ(lnl_status_name(LNL_E_Q_TOO_SMALL), "QTooSmall");
  EXPECT_EQ(lnl_schema_version(), 1);
}

TEST(CApi, ParseErrors) {
  lnl_root_system* rs = nullptr;
  EXPECT_EQ(lnl_root_system_parse("Z7", &rs), LNL_E_INVALID_ARGUMENT);
  EXPECT_EQ(rs, nullptr);
  EXPECT_NE(std::string(lnl_last_error()).find("Z7"), std::string::npos);
  EXPECT_EQ(lnl_root_system_parse("B1", &rs), LNL_E_INVALID_RANK);
  EXPECT_EQ(lnl_root_system_parse(nullptr, &rs), LNL_E_INVALID_ARGUMENT);
  EXPECT_EQ(lnl_root_system_parse("G2", nullptr), LNL_E_INVALID_ARGUMENT);
}

TEST(CApi, RootSystemQueries) {
  Rs g2("G2");
  int r = 0, h = 0;
  EXPECT_EQ(lnl_root_system_rank(g2.p, &r), LNL_OK);
  EXPECT_EQ(lnl_root_system_coxeter_number(g2.p, &h), LNL_OK);
  EXPECT_EQ(r, 2);
  EXPECT_EQ(h, 6);
  char* s = nullptr;
  ASSERT_EQ(lnl_root_system_data_json(g2.p, &s), LNL_OK);
  const Json data = Json::parse(take(s));
  EXPECT_EQ(data["marks"], Json({1, 2, 3}));
  ASSERT_EQ(lnl_table_json(&s), LNL_OK);
  EXPECT_GT(Json::parse(take(s)).size(), 30u);
}

TEST(CApi, PolyRoundTrip) {
  const char* text = R"({"coeffs":[["11","1"],["-6","1"],["1","1"]]})";
  lnl_poly* p = nullptr;
  ASSERT_EQ(lnl_poly_from_json(text, &p), LNL_OK);
  char* s = nullptr;
  ASSERT_EQ(lnl_poly_to_json(p, &s), LNL_OK);
  EXPECT_EQ(take(s), text);
  ASSERT_EQ(lnl_poly_to_text(p, 't', &s), LNL_OK);
  EXPECT_EQ(take(s), "t^2 - 6*t + 11");
  int deg = 0;
  EXPECT_EQ(lnl_poly_degree(p, &deg), LNL_OK);
  EXPECT_EQ(deg, 2);
  lnl_poly* r = nullptr;
  ASSERT_EQ(lnl_reflect(p, 6, 1, &r), LNL_OK);
  int eq = 0;
  EXPECT_EQ(lnl_poly_equal(p, r, &eq), LNL_OK);
  EXPECT_EQ(eq, 1);
  lnl_poly_free(r);
  lnl_poly_free(p);
}

TEST(CApi, MalformedJson) {
  lnl_poly* p = nullptr;
  EXPECT_EQ(lnl_poly_from_json("{not json", &p), LNL_E_INVALID_ARGUMENT);
  EXPECT_EQ(lnl_poly_from_json(R"({"coeffs":[["1","0"]]})", &p), LNL_E_INVALID_ARGUMENT);
  lnl_quasi* q = nullptr;
  EXPECT_EQ(lnl_quasi_from_json(R"({"period":2,"constituents":[{"coeffs":[]}]})", &q), LNL_E_INVALID_ARGUMENT);
}

TEST(CApi, CharQuasiConstituentAndValue) {
  Rs g2("G2");
  lnl_quasi* q = nullptr;
  ASSERT_EQ(lnl_char_quasi(g2.p, 1, 0, &q), LNL_OK);
  lnl_poly* c = nullptr;
  ASSERT_EQ(lnl_quasi_constituent(q, 7, &c), LNL_OK);
  char* s = nullptr;
  ASSERT_EQ(lnl_poly_to_json(c, &s), LNL_OK);
  EXPECT_EQ(take(s), R"({"coeffs":[["11","1"],["-6","1"],["1","1"]]})");
  ASSERT_EQ(lnl_quasi_value(q, 13, &s), LNL_OK);
  EXPECT_EQ(take(s), "102");
  uint64_t count = 0;
  ASSERT_EQ(lnl_bruteforce_modq(g2.p, 1, 13, 0, &count), LNL_OK);
  EXPECT_EQ(count, 102u);
  EXPECT_EQ(lnl_bruteforce_modq(g2.p, 1, 5, 0, &count), LNL_E_Q_TOO_SMALL);

  // Quasi JSON survives a round trip.
  ASSERT_EQ(lnl_quasi_to_json(q, &s), LNL_OK);
  const std::string first = take(s);
  lnl_quasi* back = nullptr;
  ASSERT_EQ(lnl_quasi_from_json(first.c_str(), &back), LNL_OK);
  ASSERT_EQ(lnl_quasi_to_json(back, &s), LNL_OK);
  EXPECT_EQ(take(s), first);
  lnl_quasi_free(back);
  lnl_poly_free(c);
  lnl_quasi_free(q);
}

TEST(CApi, ErrorCodesFromAlgorithms) {
  Rs e7("E7");
  lnl_poly* p = nullptr;
  EXPECT_EQ(lnl_averaged_half(e7.p, 1, 2, &p), LNL_E_NOT_ADMISSIBLE);
  Rs g2("G2");
  lnl_poly* bad = nullptr;
  ASSERT_EQ(lnl_poly_from_json(R"({"coeffs":[["1","1"],["1","1"],["1","1"]]})", &bad), LNL_OK);
  EXPECT_EQ(lnl_toy_poly(g2.p, 1, bad, &p), LNL_E_SYMMETRY_VIOLATION);
  lnl_poly_free(bad);
  EXPECT_EQ(lnl_char_quasi(g2.p, -1, 0, nullptr), LNL_E_INVALID_ARGUMENT);
  char* s = nullptr;
  EXPECT_EQ(lnl_positive_roots_json(e7.p, &s), LNL_E_UNSUPPORTED_RANK);
}

TEST(CApi, LineAndHalfPlane) {
  Rs e6("E6");
  lnl_poly* f = nullptr;
  ASSERT_EQ(lnl_limit_poly(e6.p, &f), LNL_OK);
  char* s = nullptr;
  ASSERT_EQ(lnl_halfplane_json(f, 12, &s), LNL_OK);
  const Json hp = Json::parse(take(s));
  EXPECT_EQ(hp["verdict"], "true");
  double max_re = 0;
  ASSERT_EQ(lnl_max_real_part(f, &max_re), LNL_OK);
  EXPECT_NEAR(max_re, 5.37033, 1e-4);
  lnl_poly_free(f);

  lnl_poly* c = nullptr;
  ASSERT_EQ(lnl_char_poly(e6.p, 2, &c), LNL_OK);
  ASSERT_EQ(lnl_check_line_json(c, 24, 1, &s), LNL_OK);
  EXPECT_TRUE(Json::parse(take(s))["on_line"].get<bool>());
  lnl_poly_free(c);
}

TEST(CApi, VerifySubset) {
  const int only[] = {1, 3};
  int passed = 0;
  char* s = nullptr;
  ASSERT_EQ(lnl_verify_all_json(only, 2, 0, &passed, &s), LNL_OK);
  const Json r = Json::parse(take(s));
  EXPECT_EQ(passed, 1);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_FALSE(r[0].contains("seconds"));
}

TEST(CApi, NullHandles) {
  int r = 0;
  EXPECT_EQ(lnl_root_system_rank(nullptr, &r), LNL_E_INVALID_ARGUMENT);
  lnl_poly_free(nullptr);
  lnl_quasi_free(nullptr);
  lnl_root_system_free(nullptr);
  lnl_string_free(nullptr);
}

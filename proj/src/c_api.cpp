#define LINIAL_BUILDING_LIBRARY 1
#include "linial/linial.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "linial/acceptance.hpp"
#include "linial/arrangement.hpp"
#include "linial/error.hpp"
#include "linial/eulerian.hpp"
#include "linial/json_io.hpp"

struct lnl_root_system {
  linial::RootSystemId id;
};
struct lnl_poly {
  linial::RatPoly poly;
};
struct lnl_quasi {
  linial::QuasiPoly quasi;
};

namespace {

constexpr int kSchemaVersion = 1;

thread_local std::string g_last_error;

lnl_status to_status(linial::ErrorCode code) {
  using linial::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return LNL_E_INVALID_ARGUMENT;
    case ErrorCode::InvalidRank: return LNL_E_INVALID_RANK;
    case ErrorCode::UnsupportedRank: return LNL_E_UNSUPPORTED_RANK;
    case ErrorCode::DegreeMismatch: return LNL_E_DEGREE_MISMATCH;
    case ErrorCode::ZeroPolynomial: return LNL_E_ZERO_POLYNOMIAL;
    case ErrorCode::InexactDivision: return LNL_E_INEXACT_DIVISION;
    case ErrorCode::NotAdmissible: return LNL_E_NOT_ADMISSIBLE;
    case ErrorCode::SymmetryViolation: return LNL_E_SYMMETRY_VIOLATION;
    case ErrorCode::QTooSmall: return LNL_E_Q_TOO_SMALL;
    case ErrorCode::NonConvergence: return LNL_E_NON_CONVERGENCE;
    case ErrorCode::Internal: return LNL_E_INTERNAL;
  }
  return LNL_E_INTERNAL;
}

template <class F>
lnl_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LNL_OK;
  } catch (const linial::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return LNL_E_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LNL_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LNL_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LNL_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw linial::Error(linial::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const linial::Json& j, char** out) {
  require(out, "output");
  *out = dup_string(j.dump());
}

template <class T, class... Args>
T* make(Args&&... args) {
  return new T{std::forward<Args>(args)...};
}

}  // namespace

extern "C" {

const char* lnl_status_name(lnl_status status) {
  switch (status) {
    case LNL_OK: return "Ok";
    case LNL_E_INVALID_ARGUMENT: return "InvalidArgument";
    case LNL_E_INVALID_RANK: return "InvalidRank";
    case LNL_E_UNSUPPORTED_RANK: return "UnsupportedRank";
    case LNL_E_DEGREE_MISMATCH: return "DegreeMismatch";
    case LNL_E_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case LNL_E_INEXACT_DIVISION: return "InexactDivision";
    case LNL_E_NOT_ADMISSIBLE: return "NotAdmissible";
    case LNL_E_SYMMETRY_VIOLATION: return "SymmetryViolation";
    case LNL_E_Q_TOO_SMALL: return "QTooSmall";
    case LNL_E_NON_CONVERGENCE: return "NonConvergence";
    case LNL_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* lnl_last_error(void) { return g_last_error.c_str(); }

void lnl_string_free(char* s) { std::free(s); }

int lnl_schema_version(void) { return kSchemaVersion; }

// ---------------------------------------------------------- root systems

lnl_status lnl_root_system_parse(const char* name, lnl_root_system** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    *out = make<lnl_root_system>(linial::RootSystemId::parse(name));
  });
}

void lnl_root_system_free(lnl_root_system* rs) { delete rs; }

lnl_status lnl_root_system_name(const lnl_root_system* rs, char** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = dup_string(rs->id.name());
  });
}

lnl_status lnl_root_system_rank(const lnl_root_system* rs, int* out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = rs->id.rank;
  });
}

lnl_status lnl_root_system_coxeter_number(const lnl_root_system* rs, int* out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = linial::lookup(rs->id).coxeter_number;
  });
}

lnl_status lnl_root_system_data_json(const lnl_root_system* rs, char** out) {
  return guarded([&] {
    require(rs, "root system");
    emit(linial::to_json(linial::lookup(rs->id)), out);
  });
}

lnl_status lnl_table_json(char** out) {
  return guarded([&] {
    linial::Json rows = linial::Json::array();
    for (const auto& id : linial::supported_catalog()) rows.push_back(linial::to_json(linial::lookup(id)));
    emit(rows, out);
  });
}

lnl_status lnl_positive_roots_json(const lnl_root_system* rs, char** out) {
  return guarded([&] {
    require(rs, "root system");
    const auto forms = linial::positive_roots(rs->id);
    emit(linial::Json{{"roots", forms.roots}, {"cartan", forms.cartan}, {"highest", forms.highest}}, out);
  });
}

// ----------------------------------------------------------- polynomials

lnl_status lnl_poly_from_json(const char* json, lnl_poly** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = make<lnl_poly>(linial::ratpoly_from_json(linial::Json::parse(json)));
  });
}

void lnl_poly_free(lnl_poly* p) { delete p; }

lnl_status lnl_poly_to_json(const lnl_poly* p, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    emit(linial::to_json(p->poly), out);
  });
}

lnl_status lnl_poly_to_text(const lnl_poly* p, char variable, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "output");
    *out = dup_string(p->poly.to_string(variable));
  });
}

lnl_status lnl_poly_degree(const lnl_poly* p, int* out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "output");
    *out = p->poly.degree();
  });
}

lnl_status lnl_poly_equal(const lnl_poly* a, const lnl_poly* b, int* out) {
  return guarded([&] {
    require(a, "polynomial");
    require(b, "polynomial");
    require(out, "output");
    *out = a->poly == b->poly ? 1 : 0;
  });
}

lnl_status lnl_apply_shift(const lnl_poly* f, int k, const lnl_poly* g, lnl_poly** out) {
  return guarded([&] {
    require(f, "shift polynomial");
    require(g, "polynomial");
    require(out, "output");
    *out = make<lnl_poly>(linial::apply_shift(linial::ShiftPoly(f->poly), k, g->poly));
  });
}

lnl_status lnl_reflect(const lnl_poly* g, long num, long den, lnl_poly** out) {
  return guarded([&] {
    require(g, "polynomial");
    require(out, "output");
    *out = make<lnl_poly>(linial::reflect(g->poly, linial::Rational(linial::BigInt(num), linial::BigInt(den))));
  });
}

// ------------------------------------------------------ quasi-polynomials

lnl_status lnl_quasi_from_json(const char* json, lnl_quasi** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = make<lnl_quasi>(linial::quasipoly_from_json(linial::Json::parse(json)));
  });
}

void lnl_quasi_free(lnl_quasi* q) { delete q; }

lnl_status lnl_quasi_to_json(const lnl_quasi* q, char** out) {
  return guarded([&] {
    require(q, "quasi-polynomial");
    emit(linial::to_json(q->quasi), out);
  });
}

lnl_status lnl_quasi_period(const lnl_quasi* q, int* out) {
  return guarded([&] {
    require(q, "quasi-polynomial");
    require(out, "output");
    *out = q->quasi.period();
  });
}

lnl_status lnl_quasi_value(const lnl_quasi* q, long x, char** out) {
  return guarded([&] {
    require(q, "quasi-polynomial");
    require(out, "output");
    *out = dup_string(q->quasi.value(x).str());
  });
}

lnl_status lnl_quasi_constituent(const lnl_quasi* q, long d, lnl_poly** out) {
  return guarded([&] {
    require(q, "quasi-polynomial");
    require(out, "output");
    *out = make<lnl_poly>(q->quasi.constituent(d));
  });
}

lnl_status lnl_quasi_gcd_property_json(const lnl_quasi* q, char** out) {
  return guarded([&] {
    require(q, "quasi-polynomial");
    const auto rep = linial::gcd_property(q->quasi);
    linial::Json j{{"holds", rep.holds}, {"witness", nullptr}};
    if (rep.witness) j["witness"] = {rep.witness->first, rep.witness->second};
    emit(j, out);
  });
}

lnl_status lnl_quasi_check_reciprocity(const lnl_quasi* q, int rank, int coxeter_number, int* out) {
  return guarded([&] {
    require(q, "quasi-polynomial");
    require(out, "output");
    *out = linial::check_reciprocity(q->quasi, rank, coxeter_number) ? 1 : 0;
  });
}

// -------------------------------------------------------------- algebra

lnl_status lnl_eulerian(const lnl_root_system* rs, int half, lnl_poly** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    linial::RatPoly r = linial::generalized_eulerian(rs->id);
    if (half) r = linial::truncate_half(r, linial::lookup(rs->id).coxeter_number);
    *out = make<lnl_poly>(std::move(r));
  });
}

lnl_status lnl_asc_oracle(const lnl_root_system* rs, lnl_poly** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = make<lnl_poly>(linial::asc_oracle(rs->id));
  });
}

lnl_status lnl_ehrhart(const lnl_root_system* rs, lnl_quasi** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = make<lnl_quasi>(linial::ehrhart_qp(rs->id));
  });
}

lnl_status lnl_ehrhart_series_json(const lnl_root_system* rs, int n, char** out) {
  return guarded([&] {
    require(rs, "root system");
    linial::Json arr = linial::Json::array();
    for (const auto& c : linial::series_coeffs(rs->id, n)) arr.push_back(c.get_str());
    emit(arr, out);
  });
}

lnl_status lnl_char_quasi(const lnl_root_system* rs, int m, int half, lnl_quasi** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = make<lnl_quasi>(half ? linial::half_char_quasi(rs->id, m) : linial::char_quasi(rs->id, m));
  });
}

lnl_status lnl_char_poly(const lnl_root_system* rs, int m, lnl_poly** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = make<lnl_poly>(linial::char_poly(rs->id, m));
  });
}

lnl_status lnl_weyl_char_quasi(const lnl_root_system* rs, lnl_quasi** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = make<lnl_quasi>(linial::weyl_char_quasi(rs->id));
  });
}

lnl_status lnl_admissible_json(const lnl_root_system* rs, char** out) {
  return guarded([&] {
    require(rs, "root system");
    emit(linial::to_json(linial::admissible_residues(rs->id)), out);
  });
}

lnl_status lnl_averaged_half(const lnl_root_system* rs, int m, int d, lnl_poly** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = make<lnl_poly>(linial::averaged_half(rs->id, m, d));
  });
}

lnl_status lnl_toy_poly(const lnl_root_system* rs, int m, const lnl_poly* g, lnl_poly** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    std::optional<linial::RatPoly> seed;
    if (g) seed = g->poly;
    *out = make<lnl_poly>(linial::toy_poly(rs->id, m, seed));
  });
}

// --------------------------------------------------------- verification

lnl_status lnl_limit_poly(const lnl_root_system* rs, lnl_poly** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = make<lnl_poly>(linial::limit_poly(rs->id));
  });
}

lnl_status lnl_find_roots_json(const lnl_poly* p, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    emit(linial::to_json(linial::find_roots(p->poly)), out);
  });
}

lnl_status lnl_max_real_part(const lnl_poly* p, double* out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "output");
    *out = linial::max_real_part(p->poly);
  });
}

lnl_status lnl_check_line_json(const lnl_poly* p, long center_times_2, int exact, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    const auto rep = exact ? linial::check_on_line_exact(p->poly, center_times_2)
                           : linial::check_on_line_numeric(p->poly, center_times_2);
    emit(linial::to_json(rep), out);
  });
}

lnl_status lnl_halfplane_json(const lnl_poly* p, long bound_times_2, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    emit(linial::to_json(linial::halfplane_exact(p->poly, bound_times_2)), out);
  });
}

lnl_status lnl_bruteforce_modq(const lnl_root_system* rs, int m, long q, int allow_small_q, uint64_t* out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "output");
    *out = linial::bruteforce_modq(rs->id, m, q, allow_small_q != 0);
  });
}

lnl_status lnl_track_json(const lnl_root_system* rs, int d, const int* m_list, size_t count, char** out) {
  return guarded([&] {
    require(rs, "root system");
    if (count > 0) require(m_list, "m list");
    const std::vector<int> ms(m_list, m_list + count);
    linial::Json arr = linial::Json::array();
    for (const auto& pt : linial::asymptotic_track(rs->id, d, ms)) arr.push_back(linial::to_json(pt));
    emit(arr, out);
  });
}

lnl_status lnl_verify_all_json(const int* only, size_t count, int include_timing, int* all_passed, char** out) {
  return guarded([&] {
    if (count > 0) require(only, "criterion list");
    require(all_passed, "output");
    const std::vector<int> selected(only, only + count);
    linial::Json arr = linial::Json::array();
    bool ok = true;
    for (const auto& r : linial::run_acceptance(selected)) {
      linial::Json j{{"criterion", r.number},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"reported", r.reported}};
      if (include_timing) j["seconds"] = r.seconds;
      ok = ok && r.passed;
      arr.push_back(std::move(j));
    }
    *all_passed = ok ? 1 : 0;
    emit(arr, out);
  });
}

}  // extern "C"

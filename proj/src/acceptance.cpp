#include "linial/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "linial/arrangement.hpp"
#include "linial/ehrhart.hpp"
#include "linial/error.hpp"
#include "linial/eulerian.hpp"
#include "linial/rootdata.hpp"
#include "linial/verify.hpp"

namespace linial {

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  void note(std::string line) { reported_.push_back(std::move(line)); }

  CriterionResult finish(int number, std::string title) const {
    CriterionResult r;
    r.number = number;
    r.title = std::move(title);
    r.passed = !failed_;
    std::ostringstream out;
    out << checks_ << " checks";
    for (const auto& f : failures_) out << "; FAILED: " << f;
    r.detail = out.str();
    r.reported = reported_;
    return r;
  }

 private:
  int checks_ = 0;
  bool failed_ = false;
  std::vector<std::string> failures_;
  std::vector<std::string> reported_;
};

RatPoly ints(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  for (long x : ascending) v.emplace_back(x);
  return RatPoly(std::move(v));
}

RatPoly over(RatPoly p, long den) { return p * Rational(BigInt(1), BigInt(den)); }

RootSystemId rs(const char* name) { return RootSystemId::parse(name); }

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(7);
  o << x;
  return o.str();
}

BigInt fact(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow_int(long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Table 1 rows written out independently of the catalog code.
struct TableRow {
  std::vector<int> exponents;
  std::vector<int> marks;  // c_1..c_l
  int h;
  int f;
  BigInt weyl;
  int period;
  int rad;
};

TableRow table_row(const RootSystemId& id) {
  const int l = id.rank;
  TableRow row;
  switch (id.family) {
    case Family::A:
      for (int i = 1; i <= l; ++i) row.exponents.push_back(i);
      row.marks.assign(static_cast<std::size_t>(l), 1);
      row.h = l + 1; row.f = l + 1; row.weyl = fact(l + 1); row.period = 1; row.rad = 1;
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= l; ++i) row.exponents.push_back(2 * i - 1);
      row.marks.push_back(1);
      for (int i = 2; i <= l; ++i) row.marks.push_back(2);
      row.h = 2 * l; row.f = 2; row.weyl = pow_int(2, l) * fact(l); row.period = 2; row.rad = 2;
      break;
    case Family::D:
      for (int i = 1; i <= l - 1; ++i) row.exponents.push_back(2 * i - 1);
      row.exponents.push_back(l - 1);
      std::sort(row.exponents.begin(), row.exponents.end());
      row.marks = {1, 1, 1};
      for (int i = 4; i <= l; ++i) row.marks.push_back(2);
      row.h = 2 * l - 2; row.f = 4; row.weyl = pow_int(2, l - 1) * fact(l); row.period = 2; row.rad = 2;
      break;
    case Family::E6:
      row = {{1, 4, 5, 7, 8, 11}, {1, 1, 2, 2, 2, 3}, 12, 3, pow_int(2, 7) * pow_int(3, 4) * 5, 6, 6};
      break;
    case Family::E7:
      row = {{1, 5, 7, 9, 11, 13, 17}, {1, 2, 2, 2, 3, 3, 4}, 18, 2, pow_int(2, 10) * pow_int(3, 4) * 5 * 7, 12, 6};
      break;
    case Family::E8:
      row = {{1, 7, 11, 13, 17, 19, 23, 29}, {2, 2, 3, 3, 4, 4, 5, 6}, 30, 1,
             pow_int(2, 14) * pow_int(3, 5) * pow_int(5, 2) * 7, 60, 30};
      break;
    case Family::F4:
      row = {{1, 5, 7, 11}, {2, 2, 3, 4}, 12, 1, pow_int(2, 7) * pow_int(3, 2), 12, 6};
      break;
    case Family::G2:
      row = {{1, 5}, {2, 3}, 6, 1, pow_int(2, 2) * 3, 6, 6};
      break;
  }
  return row;
}

int radical_of(int n) {
  int r = 1;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (int k = 2; k * k <= p; ++k) prime = prime && p % k;
    if (prime) r *= p;
  }
  return r;
}

CriterionResult table1() {
  Checker c;
  for (const auto& id : supported_catalog()) {
    const RootSystemData d = lookup(id);
    const TableRow row = table_row(id);
    const std::string n = id.name();
    c.expect(d.exponents == row.exponents, n + " exponents");
    c.expect(std::vector<int>(d.marks.begin() + 1, d.marks.end()) == row.marks && d.marks[0] == 1, n + " marks");
    c.expect(d.coxeter_number == row.h, n + " h");
    c.expect(d.index_of_connection == row.f, n + " f");
    c.expect(d.weyl_order == row.weyl, n + " |W|");
    c.expect(d.period == row.period, n + " period");
    c.expect(d.rad_period == row.rad, n + " rad(period)");

    // The five structural invariants.
    c.expect(std::accumulate(d.marks.begin(), d.marks.end(), 0) == d.coxeter_number, n + " h = sum c_i");
    bool dual = true;
    for (int i = 0; i < d.rank; ++i)
      dual = dual && d.exponents[static_cast<std::size_t>(i)] + d.exponents[static_cast<std::size_t>(d.rank - 1 - i)] == d.coxeter_number;
    c.expect(dual, n + " exponent duality");
    BigInt prod = 1;
    for (int e : d.exponents) prod *= e + 1;
    c.expect(prod == d.weyl_order && d.weyl_order % d.index_of_connection == 0, n + " |W| = prod(e_i+1), f | |W|");
    int l = 1;
    for (std::size_t i = 1; i < d.marks.size(); ++i) l = std::lcm(l, d.marks[i]);
    c.expect(l == d.period, n + " period = lcm(c_i)");
    c.expect(radical_of(d.period) == d.rad_period && d.coxeter_number % d.rad_period == 0, n + " rad(period) | h");
  }
  return c.finish(1, "Table 1 reproduction");
}

CriterionResult eulerian_exact() {
  Checker c;
  c.expect(classical_eulerian(2) == ints({0, 1, 1}), "R_A2 = x + x^2");
  c.expect(generalized_eulerian(rs("A6")) == ints({0, 1, 57, 302, 302, 57, 1}), "R_A6");
  c.expect(generalized_eulerian(rs("E6")) == ints({0, 1, 61, 537, 1916, 3782, 4686, 3782, 1916, 537, 61, 1}), "R_E6");
  c.expect(generalized_eulerian(rs("G2")) == ints({0, 1, 3, 4, 3, 1}), "R_G2");
  for (const char* name : {"A1", "A2", "B2", "G2"})
    c.expect(asc_oracle(rs(name)) == generalized_eulerian(rs(name)), std::string("asc oracle = product formula for ") + name);
  return c.finish(2, "Eulerian exactness");
}

CriterionResult worpitzky() {
  Checker c;
  for (const auto& id : supported_catalog()) {
    const RootSystemData d = lookup(id);
    const QuasiPoly w = apply_shift_qp(ShiftPoly(generalized_eulerian(id)), 1, ehrhart_qp(id));
    bool ok = true;
    for (const auto& p : w.constituents()) ok = ok && p == RatPoly::monomial(1, d.rank);
    c.expect(ok, id.name() + " R(S) L = q^l");
  }
  return c.finish(3, "Worpitzky identity");
}

CriterionResult g2_examples() {
  Checker c;
  const RootSystemId g2 = rs("G2");
  const QuasiPoly l = ehrhart_qp(g2);
  const RatPoly l15 = over(ints({5, 6, 1}), 12);    // (q+1)(q+5)/12
  const RatPoly l24 = over(ints({8, 6, 1}), 12);    // (q+2)(q+4)/12
  const RatPoly l3 = over(ints({9, 6, 1}), 12);     // (q+3)^2/12
  const RatPoly l0 = over(ints({12, 6, 1}), 12);    // (q^2+6q+12)/12
  c.expect(l.period() == 6, "L_G2 period 6");
  c.expect(l.constituent(1) == l15 && l.constituent(5) == l15, "L_G2 residues 1,5");
  c.expect(l.constituent(2) == l24 && l.constituent(4) == l24, "L_G2 residues 2,4");
  c.expect(l.constituent(3) == l3, "L_G2 residue 3");
  c.expect(l.constituent(0) == l0, "L_G2 residue 0");

  const QuasiPoly w = weyl_char_quasi(g2);
  c.expect(w.constituent(1) == ints({5, -6, 1}) && w.constituent(5) == ints({5, -6, 1}), "Weyl G2 residues 1,5");
  c.expect(w.constituent(2) == ints({8, -6, 1}) && w.constituent(4) == ints({8, -6, 1}), "Weyl G2 residues 2,4");
  c.expect(w.constituent(3) == ints({9, -6, 1}), "Weyl G2 residue 3");
  c.expect(w.constituent(0) == ints({12, -6, 1}), "Weyl G2 residue 0");

  const QuasiPoly chi = char_quasi(g2, 1);
  for (int d = 0; d < 6; ++d)
    c.expect(chi.constituent(d) == (d % 2 ? ints({11, -6, 1}) : ints({14, -6, 1})),
             "chi(L^1_G2) residue " + std::to_string(d));

  const RatPoly half = truncate_half(generalized_eulerian(g2), 6);
  c.expect(half == ints({0, 1, 3, 2}), "R^{1/2}_G2 = x + 3x^2 + 2x^3");
  const QuasiPoly hl = apply_shift_qp(ShiftPoly(half), 1, l);
  const RatPoly mod3[3] = {over(ints({0, 10, 6}), 12), over(ints({-4, 10, 6}), 12), over(ints({4, 10, 6}), 12)};
  for (int d = 0; d < 6; ++d) c.expect(hl.constituent(d) == mod3[d % 3], "R^{1/2}(S)L residue " + std::to_string(d));

  const QuasiPoly h1 = half_char_quasi(g2, 1);
  const long consts[6] = {12, 5, 10, 3, 14, 1};
  for (int d = 0; d < 6; ++d)
    c.expect(h1.constituent(d) == over(ints({consts[d], -8, 3}), 6), "chi^{1/2}(L^1_G2) residue " + std::to_string(d));
  return c.finish(4, "G2 worked examples");
}

CriterionResult table2() {
  Checker c;
  const std::pair<const char*, double> expected[] = {
      {"E6", 5.3703}, {"E7", 8.4367}, {"E8", 14.6604}, {"F4", 4.8967}, {"G2", 2.166}};
  for (const auto& [name, value] : expected) {
    const double got = max_real_part(limit_poly(rs(name)));
    c.expect(std::abs(got - value) <= 1e-3, std::string(name) + " max Re = " + fmt(got) + " vs " + fmt(value));
    c.note(std::string(name) + ": max Re = " + fmt(got));
  }
  // G2 is a quadratic with complex roots, so Re = -b/2a exactly.
  const RatPoly g2 = limit_poly(rs("G2"));
  const Rational disc = g2.coeff(1) * g2.coeff(1) - Rational(4) * g2.coeff(2) * g2.coeff(0);
  const Rational re = -g2.coeff(1) / (Rational(2) * g2.coeff(2));
  c.expect(g2.degree() == 2 && disc.sign() < 0 && re == Rational(13, 6), "G2 exact max Re = " + re.str());
  c.note("G2: exact max Re = " + re.str() + " (printed value 2.166 is a truncation)");
  const std::complex<double> e6[] = {{4.55334, 0.465487}, {4.55334, -0.465487}, {4.78675, 1.55735},
                                     {4.78675, -1.55735}, {5.37033, 3.11072},   {5.37033, -3.11072}};
  const auto roots = require_converged(find_roots(limit_poly(rs("E6")))).roots;
  c.expect(roots.size() == 6, "E6 limit polynomial has six roots");
  for (const auto& z : e6) {
    double best = 1e9;
    for (const auto& r : roots) best = std::min(best, std::max(std::abs(r.real() - z.real()), std::abs(r.imag() - z.imag())));
    c.expect(best <= 1e-4, "E6 root near " + fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i");
  }
  return c.finish(5, "Table 2 reproduction");
}

CriterionResult halfplane() {
  Checker c;
  for (const auto& id : exceptional_ids()) {
    const RootSystemData d = lookup(id);
    const HalfPlaneReport r = halfplane_exact(limit_poly(id), d.coxeter_number);
    const bool ok = r.exact ? r.verdict == Tristate::True : (r.verdict == Tristate::True && r.margin > 0.3);
    c.expect(ok, id.name() + " Re < h/2 (" + (r.exact ? "exact" : "numeric") + ")");
    c.note(id.name() + ": " + (r.exact ? "exact Routh" : "numeric fallback") + ", margin " + fmt(r.margin));
  }
  return c.finish(6, "Half-plane bound for limit polynomials");
}

CriterionResult reciprocity() {
  Checker c;
  for (const auto& id : supported_catalog()) {
    const RootSystemData d = lookup(id);
    c.expect(check_reciprocity(ehrhart_qp(id), d.rank, d.coxeter_number), id.name() + " reciprocity");
    const Rational sign = d.rank % 2 == 0 ? Rational(1) : Rational(-1);
    for (int m = 0; m <= 5; ++m) {
      const QuasiPoly chi = char_quasi(id, m);
      const long mh = static_cast<long>(m) * d.coxeter_number;
      bool ok = true;
      for (int r = 0; r < chi.period(); ++r)
        ok = ok && chi.constituent(r) == reflect(chi.constituent(mh - r), Rational(mh)) * sign;
      c.expect(ok, id.name() + " functional equation m=" + std::to_string(m));
    }
  }
  return c.finish(7, "Reciprocity and functional equation");
}

CriterionResult table3() {
  Checker c;
  struct Row {
    const char* name;
    std::vector<int> divisors;
    int m0;
  };
  const Row rows[] = {{"E6", {1, 2, 3, 6}, 1}, {"E7", {1, 3}, 2}, {"E8", {1, 3, 5, 15}, 2},
                      {"F4", {1, 2, 3, 4, 6, 12}, 1}, {"G2", {1, 2, 3, 6}, 1}};
  for (const auto& row : rows) {
    const RootSystemId id = rs(row.name);
    const RootSystemData d = lookup(id);
    const AdmissibleReport rep = admissible_residues(id);
    c.expect(rep.divisors == row.divisors, std::string(row.name) + " admissible divisors");
    c.expect(rep.m0 == row.m0, std::string(row.name) + " m0");
    // Direct check of the defining equalities for every residue: admissible
    // exactly when L_d = L_{d+kh} = L_{-d+kh} for all k and m = 1..6.
    std::vector<bool> raw(static_cast<std::size_t>(d.period), true);
    for (int m = 1; m <= 6; ++m) {
      const QuasiPoly chi = char_quasi(id, m);
      for (int r = 0; r < d.period; ++r)
        for (int k = 0; k < d.period; ++k) {
          const long kh = static_cast<long>(k) * d.coxeter_number;
          if (chi.constituent(r + kh) != chi.constituent(r) || chi.constituent(-r + kh) != chi.constituent(r))
            raw[static_cast<std::size_t>(r)] = false;
        }
    }
    std::vector<int> raw_residues;
    for (int r = 0; r < d.period; ++r)
      if (raw[static_cast<std::size_t>(r)]) raw_residues.push_back(r);
    c.expect(raw_residues == rep.residues, std::string(row.name) + " raw equalities agree with gcd criterion");
  }
  return c.finish(8, "Table 3 reproduction");
}

CriterionResult averaging() {
  Checker c;
  for (const auto& id : exceptional_ids()) {
    const RootSystemData d = lookup(id);
    const Rational sign = d.rank % 2 == 0 ? Rational(1) : Rational(-1);
    const AdmissibleReport rep = admissible_residues(id);
    for (int m = 0; m <= 4; ++m) {
      const QuasiPoly chi = char_quasi(id, m);
      const QuasiPoly half = half_char_quasi(id, m);
      const long mh = static_cast<long>(m) * d.coxeter_number;
      for (int r : rep.residues) {
        const RatPoly f = averaged_half(half, rep, d.coxeter_number, r);
        c.expect(chi.constituent(r) == f + reflect(f, Rational(mh)) * sign,
                 id.name() + " m=" + std::to_string(m) + " d=" + std::to_string(r));
      }
    }
  }
  return c.finish(9, "Averaging identity");
}

CriterionResult line_certification() {
  Checker c;
  const RootSystemId g2 = rs("G2");
  for (int m = 1; m <= 30; ++m)
    c.expect(check_on_line_exact(char_poly(g2, m), 6L * m).on_line, "G2 m=" + std::to_string(m));
  struct Asserted {
    const char* name;
    std::vector<int> ms;
  };
  const Asserted rows[] = {{"E6", {5, 11, 17, 23}}, {"E7", {5, 11, 17, 23}}, {"F4", {5, 11, 17, 23}}, {"E8", {29, 59}}};
  for (const auto& row : rows) {
    const RootSystemId id = rs(row.name);
    const long h = lookup(id).coxeter_number;
    for (int m : row.ms)
      c.expect(check_on_line_exact(char_poly(id, m), h * m).on_line, std::string(row.name) + " m=" + std::to_string(m));
    std::string on, off;
    for (int m = 1; m <= 30; ++m) {
      if (std::find(row.ms.begin(), row.ms.end(), m) != row.ms.end()) continue;
      (check_on_line_exact(char_poly(id, m), h * m).on_line ? on : off) += " " + std::to_string(m);
    }
    c.note(std::string(row.name) + " other m<=30 on line:" + (on.empty() ? " none" : on) +
           "; off line:" + (off.empty() ? " none" : off));
  }
  return c.finish(10, "Line certification");
}

CriterionResult oracle_equivalence() {
  Checker c;
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystemId id = rs(name);
    const long h = lookup(id).coxeter_number;
    for (int m = 0; m <= 3; ++m) {
      const QuasiPoly chi = char_quasi(id, m);
      bool ok = true;
      long first_bad = -1;
      for (long q = h * m + 1; q <= 150; ++q) {
        if (q < 1) continue;
        const bool same = chi.value(q) == Rational(BigInt(static_cast<unsigned long>(bruteforce_modq(id, m, q))));
        if (!same && first_bad < 0) first_bad = q;
        ok = ok && same;
      }
      c.expect(ok, std::string(name) + " m=" + std::to_string(m) + " first mismatch q=" + std::to_string(first_bad));
    }
  }
  return c.finish(11, "Brute-force oracle equivalence");
}

CriterionResult asymptotics() {
  Checker c;
  const RootSystemId e6 = rs("E6");
  const auto track = asymptotic_track(e6, 1, {10, 100, 1000});
  for (const auto& pt : track)
    c.note("E6 d=1 m=" + std::to_string(pt.m) + ": distance " + fmt(pt.distance) + ", max |Re/m - 6| " +
           fmt(pt.max_real_deviation));
  c.expect(track.size() == 3, "three tracked points");
  if (track.size() == 3) {
    c.expect(track[0].distance > track[1].distance && track[1].distance > track[2].distance, "distances strictly decreasing");
    c.expect(track[2].distance < 0.05, "m=1000 within 0.05 of the limit roots");
    c.expect(track[2].max_real_deviation < 0.05, "m=1000 real parts within 0.05 of h/2");
  }
  return c.finish(12, "Asymptotic root tracking");
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "Table 1 reproduction", table1},
      {2, "Eulerian exactness", eulerian_exact},
      {3, "Worpitzky identity", worpitzky},
      {4, "G2 worked examples", g2_examples},
      {5, "Table 2 reproduction", table2},
      {6, "Half-plane bound for limit polynomials", halfplane},
      {7, "Reciprocity and functional equation", reciprocity},
      {8, "Table 3 reproduction", table3},
      {9, "Averaging identity", averaging},
      {10, "Line certification", line_certification},
      {11, "Brute-force oracle equivalence", oracle_equivalence},
      {12, "Asymptotic root tracking", asymptotics},
  };
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& crit : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), crit.number) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = crit.run();
    } catch (const Error& e) {
      r.number = crit.number;
      r.title = crit.title;
      r.passed = false;
      r.detail = std::string(error_name(e.code())) + ": " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace linial

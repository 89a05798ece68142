#include "linial/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "linial/error.hpp"

namespace linial {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow2(int n) {
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(n);
  return r;
}

int radical(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    r *= p;
    while (n % p == 0) n /= p;
  }
  return n > 1 ? r * n : r;
}

int marks_lcm(const std::vector<int>& marks) {
  int l = 1;
  for (std::size_t i = 1; i < marks.size(); ++i) l = std::lcm(l, marks[i]);
  return l;
}

void validate(const RootSystemId& id) {
  const int r = id.rank;
  bool ok = true;
  switch (id.family) {
    case Family::A: ok = r >= 1 && r <= kMaxClassicalRank; break;
    case Family::B:
    case Family::C: ok = r >= 2 && r <= kMaxClassicalRank; break;
    case Family::D: ok = r >= 3 && r <= kMaxClassicalRank; break;
    case Family::E6: ok = r == 6; break;
    case Family::E7: ok = r == 7; break;
    case Family::E8: ok = r == 8; break;
    case Family::F4: ok = r == 4; break;
    case Family::G2: ok = r == 2; break;
  }
  if (!ok) throw Error(ErrorCode::InvalidRank, "invalid rank " + std::to_string(r) + " for " + id.name());
}

}  // namespace

RootSystemId RootSystemId::make(Family family, int rank) {
  RootSystemId id{family, rank};
  validate(id);
  return id;
}

RootSystemId RootSystemId::parse(std::string_view text) {
  static const std::map<std::string, RootSystemId, std::less<>> exceptional = {
      {"E6", {Family::E6, 6}}, {"E7", {Family::E7, 7}}, {"E8", {Family::E8, 8}},
      {"F4", {Family::F4, 4}}, {"G2", {Family::G2, 2}},
  };
  if (auto it = exceptional.find(text); it != exceptional.end()) return it->second;
  if (text.size() >= 2 && std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (text.size() > 4) throw Error(ErrorCode::InvalidRank, "rank too large in '" + std::string(text) + "'");
    const int rank = std::stoi(std::string(text.substr(1)));
    switch (text[0]) {
      case 'A': return make(Family::A, rank);
      case 'B': return make(Family::B, rank);
      case 'C': return make(Family::C, rank);
      case 'D': return make(Family::D, rank);
      default: break;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown root system '" + std::string(text) + "'");
}

std::string RootSystemId::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

bool RootSystemId::is_exceptional() const {
  return family != Family::A && family != Family::B && family != Family::C && family != Family::D;
}

RootSystemData lookup(const RootSystemId& id) {
  validate(id);
  RootSystemData d;
  d.id = id;
  d.rank = id.rank;
  const int l = id.rank;
  std::vector<int> c;  // c_1..c_l
  switch (id.family) {
    case Family::A:
      for (int i = 1; i <= l; ++i) d.exponents.push_back(i);
      c.assign(static_cast<std::size_t>(l), 1);
      d.index_of_connection = l + 1;
      d.weyl_order = factorial(l + 1);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= l; ++i) d.exponents.push_back(2 * i - 1);
      c.assign(static_cast<std::size_t>(l), 2);
      c[0] = 1;
      d.index_of_connection = 2;
      d.weyl_order = pow2(l) * factorial(l);
      break;
    case Family::D:
      if (l == 3) {
        // D3 = A3.
        RootSystemData a3 = lookup(RootSystemId{Family::A, 3});
        a3.id = id;
        return a3;
      }
      for (int i = 1; i <= l - 1; ++i) d.exponents.push_back(2 * i - 1);
      d.exponents.push_back(l - 1);
      c.assign(static_cast<std::size_t>(l), 2);
      c[0] = c[1] = c[2] = 1;
      d.index_of_connection = 4;
      d.weyl_order = pow2(l - 1) * factorial(l);
      break;
    case Family::E6:
      d.exponents = {1, 4, 5, 7, 8, 11};
      c = {1, 1, 2, 2, 2, 3};
      d.index_of_connection = 3;
      d.weyl_order = BigInt(51840);
      break;
    case Family::E7:
      d.exponents = {1, 5, 7, 9, 11, 13, 17};
      c = {1, 2, 2, 2, 3, 3, 4};
      d.index_of_connection = 2;
      d.weyl_order = BigInt(2903040);
      break;
    case Family::E8:
      d.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
      c = {2, 2, 3, 3, 4, 4, 5, 6};
      d.index_of_connection = 1;
      d.weyl_order = BigInt(696729600);
      break;
    case Family::F4:
      d.exponents = {1, 5, 7, 11};
      c = {2, 2, 3, 4};
      d.index_of_connection = 1;
      d.weyl_order = BigInt(1152);
      break;
    case Family::G2:
      d.exponents = {1, 5};
      c = {2, 3};
      d.index_of_connection = 1;
      d.weyl_order = BigInt(12);
      break;
  }
  std::sort(d.exponents.begin(), d.exponents.end());
  std::sort(c.begin(), c.end());
  d.marks.push_back(1);
  d.marks.insert(d.marks.end(), c.begin(), c.end());
  d.coxeter_number = std::accumulate(d.marks.begin(), d.marks.end(), 0);
  d.period = marks_lcm(d.marks);
  d.rad_period = radical(d.period);
  return d;
}

std::vector<RootSystemId> supported_catalog() {
  std::vector<RootSystemId> out;
  for (int r = 2; r <= 8; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= 8; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= 8; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= 8; ++r) out.push_back({Family::D, r});
  for (const auto& e : exceptional_ids()) out.push_back(e);
  return out;
}

std::vector<RootSystemId> exceptional_ids() {
  return {{Family::E6, 6}, {Family::E7, 7}, {Family::E8, 8}, {Family::F4, 4}, {Family::G2, 2}};
}

// ------------------------------------------------------ positive roots

namespace {

std::vector<std::vector<int>> cartan_matrix(const RootSystemId& id) {
  const bool type_a = id.family == Family::A || (id.family == Family::D && id.rank == 3);
  if (type_a) {
    const int l = id.rank;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l; ++i) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
      if (i + 1 < l) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
        a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
      }
    }
    return a;
  }
  // Rank-2 labelings put the short simple root first, so the highest root is
  // (2,1) for B2/C2 and (3,2) for G2.
  switch (id.family) {
    case Family::B:
      if (id.rank == 2) return {{2, -2}, {-1, 2}};
      return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};  // alpha_3 short
    case Family::C:
      if (id.rank == 2) return {{2, -2}, {-1, 2}};
      return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};  // alpha_3 long
    case Family::G2:
      return {{2, -3}, {-1, 2}};
    default:
      break;
  }
  throw Error(ErrorCode::Internal, "no Cartan matrix for " + id.name());
}

}  // namespace

std::vector<int> simple_reflection(const PositiveRootForms& forms, int i, const std::vector<int>& v) {
  const auto& row = forms.cartan[static_cast<std::size_t>(i)];
  int pairing = 0;
  for (std::size_t j = 0; j < v.size(); ++j) pairing += row[j] * v[j];
  std::vector<int> out = v;
  out[static_cast<std::size_t>(i)] -= pairing;
  return out;
}

PositiveRootForms positive_roots(const RootSystemId& id) {
  validate(id);
  if (id.rank > 3)
    throw Error(ErrorCode::UnsupportedRank, "positive root tables only for rank <= 3, got " + id.name());
  PositiveRootForms forms;
  forms.cartan = cartan_matrix(id);
  const int l = id.rank;

  // Orbit of the simple roots under the simple reflections, keeping the
  // positive half.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(static_cast<std::size_t>(l), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < l; ++i) {
        auto w = simple_reflection(forms, i, v);
        if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; }) && seen.insert(w).second)
          next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  forms.roots.assign(seen.begin(), seen.end());
  std::sort(forms.roots.begin(), forms.roots.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a > b;
  });
  forms.highest = forms.roots.back();
  return forms;
}

}  // namespace linial

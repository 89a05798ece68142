#include "linial/eulerian.hpp"

#include <algorithm>
#include <set>

#include "linial/error.hpp"

namespace linial {

namespace {

// [c]_x = 1 + x + ... + x^{c-1}
RatPoly q_integer(int c) { return RatPoly(std::vector<Rational>(static_cast<std::size_t>(c), Rational(1))); }

using Matrix = std::vector<std::vector<int>>;

Matrix identity(int n) {
  Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

// Columns of a Weyl group element are the images of the simple roots.
Matrix reflection_matrix(const PositiveRootForms& forms, int i, int rank) {
  Matrix m(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int j = 0; j < rank; ++j) {
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(j)] = 1;
    const auto img = simple_reflection(forms, i, e);
    for (int r = 0; r < rank; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(r)];
  }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<int> apply(const Matrix& w, const std::vector<int>& v) {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += w[i][j] * v[j];
  return out;
}

bool is_positive(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

}  // namespace

RatPoly classical_eulerian(int rank) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "Eulerian polynomial needs rank >= 1");
  // Row n of the Eulerian triangle: A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
  std::vector<BigInt> row{1};
  for (int n = 2; n <= rank; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      BigInt v = 0;
      if (k < n - 1) v += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k >= 1) v += (n - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  std::vector<Rational> coeffs{Rational(0)};
  for (const auto& a : row) coeffs.emplace_back(a);
  return RatPoly(std::move(coeffs));
}

RatPoly generalized_eulerian(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  RatPoly r = classical_eulerian(data.rank);
  for (int c : data.marks) r = r * q_integer(c);
  return r;
}

RatPoly truncate_half(const RatPoly& r, int coxeter_number) {
  const int h = coxeter_number;
  if (r.degree() != h - 1)
    throw Error(ErrorCode::DegreeMismatch, "truncation expects degree h-1 = " + std::to_string(h - 1) +
                                               ", got " + std::to_string(r.degree()));
  // Indices i with 2i < h.
  RatPoly out = r.truncated((h + 1) / 2);
  if (h % 2 == 0) out += RatPoly::monomial(r.coeff(h / 2) / Rational(2), h / 2);
  return out;
}

RatPoly asc_oracle(const RootSystemId& id) {
  const RootSystemData data = lookup(id);
  const PositiveRootForms forms = positive_roots(id);
  const int l = data.rank;

  std::vector<Matrix> gens;
  for (int i = 0; i < l; ++i) gens.push_back(reflection_matrix(forms, i, l));
  std::set<Matrix> group{identity(l)};
  std::vector<Matrix> frontier{identity(l)};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        Matrix ws = multiply(w, s);
        if (group.insert(ws).second) next.push_back(std::move(ws));
      }
    frontier = std::move(next);
  }
  if (BigInt(static_cast<long>(group.size())) != data.weyl_order)
    throw Error(ErrorCode::Internal, "enumerated Weyl group has wrong order for " + id.name());

  // Simple roots alpha_1..alpha_l with marks read off the highest root, and
  // alpha_0 = -highest with mark 1.
  std::vector<std::pair<std::vector<int>, int>> affine_simple;
  std::vector<int> lowest = forms.highest;
  for (int& x : lowest) x = -x;
  affine_simple.emplace_back(std::move(lowest), 1);
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(static_cast<std::size_t>(l), 0);
    e[static_cast<std::size_t>(i)] = 1;
    affine_simple.emplace_back(e, forms.highest[static_cast<std::size_t>(i)]);
  }

  std::vector<BigInt> counts(static_cast<std::size_t>(data.coxeter_number) + 1, 0);
  for (const auto& w : group) {
    int asc = 0;
    for (const auto& [alpha, mark] : affine_simple)
      if (is_positive(apply(w, alpha))) asc += mark;
    counts[static_cast<std::size_t>(asc)] += 1;
  }
  std::vector<Rational> coeffs;
  const BigInt f = data.index_of_connection;
  for (const auto& c : counts) {
    if (c % f != 0) throw Error(ErrorCode::InexactDivision, "asc count not divisible by index of connection");
    coeffs.emplace_back(BigInt(c / f));
  }
  return RatPoly(std::move(coeffs));
}

}  // namespace linial

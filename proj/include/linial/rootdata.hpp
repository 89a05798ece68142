#pragma once

// Catalog of irreducible crystallographic root systems: exponents, marks of
// the highest root, Coxeter number, index of connection, Weyl group order and
// the period of the alcove Ehrhart quasi-polynomial.

#include <string>
#include <string_view>
#include <vector>

#include "linial/ratpoly.hpp"

namespace linial {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  /// Grammar: E6|E7|E8|F4|G2|A<k>|B<k>|C<k>|D<k>.
  static RootSystemId parse(std::string_view text);
  static RootSystemId make(Family family, int rank);

  std::string name() const;
  bool is_exceptional() const;

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
};

inline constexpr int kMaxClassicalRank = 32;

struct RootSystemData {
  RootSystemId id;
  int rank = 0;
  std::vector<int> exponents;  // ascending e_1..e_l
  std::vector<int> marks;      // c_0 = 1, then c_1..c_l ascending
  int coxeter_number = 0;
  int index_of_connection = 0;
  BigInt weyl_order;
  int period = 0;
  int rad_period = 0;
};

/// Throws Error(InvalidRank) for ranks the family does not admit.
RootSystemData lookup(const RootSystemId& id);

/// The ids exercised by the catalog-wide checks: A2..A8, B2..B8, C2..C8,
/// D4..D8, E6, E7, E8, F4, G2.
std::vector<RootSystemId> supported_catalog();
std::vector<RootSystemId> exceptional_ids();

/// Positive roots as coefficient vectors in the simple roots, for rank <= 3.
struct PositiveRootForms {
  std::vector<std::vector<int>> roots;
  /// cartan[i][j] = <alpha_i^vee, alpha_j>; s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i.
  std::vector<std::vector<int>> cartan;
  /// Expansion of the highest root; its entries are the marks in simple-root order.
  std::vector<int> highest;
};

/// Throws Error(UnsupportedRank) for rank > 3.
PositiveRootForms positive_roots(const RootSystemId& id);

/// s_i applied to a coefficient vector.
std::vector<int> simple_reflection(const PositiveRootForms& forms, int i, const std::vector<int>& v);

}  // namespace linial

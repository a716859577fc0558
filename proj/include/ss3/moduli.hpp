#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "ss3/gf3.hpp"
#include "ss3/unipoly.hpp"

namespace ss3 {

/// Coordinate on the moduli line of covers: t = c^2 / b^3, never zero.
struct ModuliPointA {
  Felt t;
  explicit ModuliPointA(Felt t_);
};

/// The map from the cover line to the curve line: t -> -(1 + t^4)^5 / t^18.
Felt moduli_map(const Felt& t);

/// The invariant of C_{1,c}: -(1 + c^8)^5 / c^36.
Felt eq_invariant(const Felt& c);

/// The degree-20 fiber polynomial -(1 + t^4)^5 - I * t^18 over I's field.
UniPoly fiber_polynomial(const Felt& I);

struct FiberResult {
  int distinct_roots;            // over the algebraic closure
  int splitting_degree_over_f3;  // degree of the splitting field over F_3
  bool roots_listed;             // false when the splitting field exceeds the
                                 // supported degree cap
  std::vector<Felt> roots;       // nonzero roots, when listed
};

/// Distinct nonzero roots of the fiber polynomial, with the field extended
/// until the polynomial splits (capped at total degree 12 over F_3).
FiberResult fiber_count(const Felt& I);

/// (Jac C)[2] realized combinatorially: even-cardinality subsets of the six
/// Weierstrass labels {0..5} modulo complementation, under symmetric
/// difference, with the Weil pairing given by intersection parity.
class TwoTorsionModel {
 public:
  /// Canonical representative of a class: the numerically smaller of the
  /// bitmask and its complement in {0..5}.
  static uint8_t normalize(uint8_t mask);
  /// All 16 group elements, canonical and sorted (identity first).
  static std::vector<uint8_t> elements();
  static uint8_t add(uint8_t a, uint8_t b);
  /// Weil pairing value in {0, 1}.
  static int pairing(uint8_t a, uint8_t b);
};

/// An order-4 subgroup, stored as its four canonical elements, sorted.
using Order4Subgroup = std::array<uint8_t, 4>;

/// All order-4 subgroups of the 2-torsion model.
std::vector<Order4Subgroup> all_order4_subgroups();

struct SubgroupCensus {
  int total;
  int isotropic;
  int nonisotropic;
};

/// Counts (35, 15, 20).
SubgroupCensus subgroup_census();

/// The non-isotropic subgroup attached to a cubic factor with the given
/// 3-subset of root labels: identity plus the three pairs inside the subset.
Order4Subgroup kappa_of_cubic(const std::set<int>& roots_of_g);

}  // namespace ss3

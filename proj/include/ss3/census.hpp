#pragma once

#include <map>

#include "ss3/genus2.hpp"
#include "ss3/weil.hpp"

namespace ss3 {

struct CensusReport {
  long long q = 0;
  std::set<WeilQuartic> observed;
  std::set<WeilQuartic> expected;
  std::map<WeilQuartic, Genus2Curve> witnesses;
  long long curves_scanned = 0;

  bool pass() const { return observed == expected; }
};

/// Enumerates every reduced supersingular form
/// twist * y^2 = x^6 + c3 x^3 + c1 x + c0 (c1 != 0, twist in {1, nonsquare})
/// over F_q, counts points, and aggregates the observed Weil quartics with a
/// first-found witness per quartic.  Deterministic for any worker count.
/// q in {3, 9, 27}; q = 81 runs a class-based shortcut instead of the brute
/// sweep and must be requested explicitly via allow_q81.
CensusReport weil_census(long long q, int jobs = 1, bool allow_q81 = false);

/// Builds and count-verifies an explicit curve whose Weil quartic is target;
/// target must be in theorem1_list(q).
Genus2Curve construct_curve_with_weil(long long q, const WeilQuartic& target);

}  // namespace ss3

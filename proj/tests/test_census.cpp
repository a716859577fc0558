#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ss3/census.hpp"
#include "ss3/unipoly.hpp"

using namespace ss3;

TEST_CASE("census q=3") {
  CensusReport rep = weil_census(3);
  CHECK(rep.pass());
  CHECK(rep.observed.size() == 4);
  CHECK(rep.curves_scanned == 2 * 3 * 2 * 3);
  // Witnesses actually have the Weil quartic they witness.
  for (const auto& [W, C] : rep.witnesses) CHECK(weil_of_curve(C) == W);
  // (x^2+3)^2 = (0,6) is on the abelian-surface list but not observed.
  CHECK(rep.observed.count(WeilQuartic(0, 6, 3)) == 0);
  CHECK(lemma_ssas_list(3).count(WeilQuartic(0, 6, 3)) == 1);
}

TEST_CASE("census q=9") {
  CensusReport rep = weil_census(9);
  CHECK(rep.pass());
  CHECK(rep.observed.size() == 8);
  // x^4 - qx^2 + q^2 is excluded.
  CHECK(rep.observed.count(WeilQuartic(0, -9, 9)) == 0);
  // Twist closure.
  for (const auto& W : rep.observed)
    CHECK(rep.observed.count(WeilQuartic(-W.s1, W.s2, 9)) == 1);
  for (const auto& [W, C] : rep.witnesses) CHECK(weil_of_curve(C) == W);
}

TEST_CASE("census determinism across worker counts") {
  CensusReport a = weil_census(9, 1);
  CensusReport b = weil_census(9, 4);
  CHECK(a.observed == b.observed);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  auto it = b.witnesses.begin();
  for (const auto& [W, C] : a.witnesses) {
    CHECK(it->first == W);
    CHECK(it->second.twist == C.twist);
    CHECK(it->second.sextic == C.sextic);
    ++it;
  }
}

TEST_CASE("census input validation") {
  CHECK_THROWS(weil_census(5));
  CHECK_THROWS(weil_census(243));
  CHECK_THROWS(weil_census(81));  // opt-in required
}

TEST_CASE("construct witnesses q=3 and q=9") {
  for (long long q : {3LL, 9LL}) {
    for (const auto& W : theorem1_list(q)) {
      Genus2Curve C = construct_curve_with_weil(q, W);
      CHECK(weil_of_curve(C) == W);
    }
  }
  // x^4 + 9 at q=3 comes from y^2 = z^5 + 1.
  Genus2Curve C = construct_curve_with_weil(3, WeilQuartic(0, 0, 3));
  CHECK(C.sextic.degree() == 5);
  CHECK_THROWS(construct_curve_with_weil(3, WeilQuartic(0, 6, 3)));
}

TEST_CASE("base-change coherence of witnesses") {
  // Counting a witness over F_{q^2} gives the squared-Frobenius quartic:
  // s1' = s1^2 - 2 s2, s2' = s2^2 - 2 q s1^2 + 2 q^2.
  CensusReport rep = weil_census(3);
  for (const auto& [W, C] : rep.witnesses) {
    int d = 1;
    const Embedding& up2 = Embedding::get(d, 2 * d);
    const Embedding& up4 = Embedding::get(d, 4 * d);
    long long n2 = count_points(C, up2);
    long long n4 = count_points(C, up4);
    WeilQuartic Wsq = weil_from_counts(n2, n4, 9);
    CHECK(Wsq.s1 == W.s1 * W.s1 - 2 * W.s2);
    CHECK(Wsq.s2 == W.s2 * W.s2 - 2 * 3 * W.s1 * W.s1 + 2 * 9);
  }
}

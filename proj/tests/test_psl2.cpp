#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ss3/psl2.hpp"

#include <set>

using namespace ss3;

TEST_CASE("degree of F equals the group order") {
  CHECK(build_F(3).degree() == 12);
  CHECK(build_F(9).degree() == 360);
  CHECK_THROWS(build_F(5));
}

TEST_CASE("F is reduced") {
  for (int r : {3, 9}) {
    RationalFn F = build_F(r);
    CHECK(gcd(F.num, F.den).degree() == 0);
  }
}

TEST_CASE("invariance under the group generators") {
  CHECK(check_invariance(3));
  CHECK(check_invariance(9));
  // Negative control: z -> z^2 is not a fractional linear map.
  const FieldDesc& f3 = FieldDesc::get(1);
  RationalFn F = build_F(3);
  CHECK(!invariant_under(F, UniPoly::from_ints(f3, {0, 0, 1}),
                         UniPoly::from_ints(f3, {1})));
  // Negative control: z -> 2z is not in PSL_2(F_3) (det 2 is nonsquare... the
  // substitution z -> z/2 = 2z is the map of [[2,0],[0,1]], not in PSL_2).
  CHECK(!invariant_under(F, UniPoly::from_ints(f3, {0, 2}),
                         UniPoly::from_ints(f3, {1})));
}

TEST_CASE("orbit structure: roots of F(z) - F(z0) are the G-orbit of z0") {
  const FieldDesc& f3 = FieldDesc::get(1);
  const FieldDesc& f729 = FieldDesc::get(6);
  const Embedding& up = Embedding::get(1, 6);
  RationalFn F = build_F(3);
  UniPoly num = F.num.map_coeffs(up), den = F.den.map_coeffs(up);

  // Pick a z0 with trivial stabilizer and nonvanishing denominator.
  for (uint32_t zv = 3; zv < 40; ++zv) {
    Felt z0 = f729.element(zv);
    if (den.eval(z0).is_zero()) continue;
    Felt v0 = num.eval(z0) / den.eval(z0);

    // Orbit of z0 under all 12 fractional linear maps with entries in F_3.
    std::set<uint32_t> orbit;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            if (((a * d - b * c) % 3 + 3) % 3 != 1) continue;
            Felt denom = up.map(f3.from_int(c)) * z0 + up.map(f3.from_int(d));
            if (denom.is_zero()) continue;
            Felt img =
                (up.map(f3.from_int(a)) * z0 + up.map(f3.from_int(b))) / denom;
            orbit.insert(img.packed());
          }
    if (orbit.size() != 12) continue;  // stabilizer nontrivial; try another z0

    UniPoly shifted = num - den * v0;
    auto roots = roots_in(shifted, Embedding::get(6, 6));
    std::set<uint32_t> root_set;
    for (const Felt& r : roots) root_set.insert(r.packed());
    CHECK(root_set == orbit);
    return;
  }
  FAIL("no suitable z0 found");
}

TEST_CASE("separability of the fiber polynomial") {
  const FieldDesc& f9 = FieldDesc::get(2);
  const FieldDesc& f3 = FieldDesc::get(1);
  CHECK(check_separability(3, f3.one()));
  for (uint32_t v = 1; v < 9; ++v) CHECK(check_separability(3, f9.element(v)));
  CHECK_THROWS(check_separability(3, f9.zero()));
}

TEST_CASE("trace-zero criterion") {
  CHECK(verify_trace_zero_criterion(3, 9));
  CHECK(verify_trace_zero_criterion(3, 27));
  CHECK(verify_trace_zero_criterion(9, 81));
}

TEST_CASE("complete splitting") {
  CHECK(verify_complete_splitting(3, 9));
  CHECK(verify_complete_splitting(3, 27));
  CHECK(verify_complete_splitting(9, 81));
  // Negative control: some nonzero-trace c over F_9 does not split.
  const FieldDesc& f9 = FieldDesc::get(2);
  const Embedding& down = Embedding::get(1, 2);
  bool found_nonsplit = false;
  for (uint32_t v = 1; v < 9 && !found_nonsplit; ++v) {
    Felt c = f9.element(v);
    if (rel_trace(c, down).is_zero()) continue;
    if (!splits_completely_for(c, 3)) found_nonsplit = true;
  }
  CHECK(found_nonsplit);
}

TEST_CASE("sign descent") {
  SignDescentReport r3 = verify_sign_descent(3);
  CHECK(r3.ok);
  SignDescentReport r27 = verify_sign_descent(27);
  CHECK(r27.ok);
  CHECK(r27.qualifying > 0);
  CHECK(r27.qualifying == r27.plus_sign + r27.minus_sign);
  CHECK_THROWS(verify_sign_descent(9));
}

TEST_CASE("order census") {
  auto c3 = psl2_order_census(3);
  long long total3 = 0;
  for (auto [o, n] : c3) {
    total3 += n;
    CHECK((o == 1 || o == 2 || o == 3));  // PSL_2(F_3) ~ A_4
  }
  CHECK(total3 == 12);
  CHECK(c3[1] == 1);
  CHECK(c3.count(6) == 0);

  auto c9 = psl2_order_census(9);
  long long total9 = 0;
  for (auto [o, n] : c9) {
    total9 += n;
    CHECK((o >= 1 && o <= 5));  // PSL_2(F_9) ~ A_6
  }
  CHECK(total9 == 360);
  CHECK(c9[1] == 1);
  CHECK(c9.count(6) == 0);
}

TEST_CASE("rho normal forms have sigma of order 3") {
  CHECK(verify_rho_normal_forms());
}

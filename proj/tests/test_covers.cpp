#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ss3/covers.hpp"
#include "ss3/moduli.hpp"

#include <map>

using namespace ss3;

TEST_CASE("build_cover shape") {
  const FieldDesc& f3 = FieldDesc::get(1);
  CoverTriple T = build_cover(f3.one(), f3.one());
  // sextic = c * g1 * g2 exactly.
  UniPoly g1 = cover_cubic_g1(f3.one(), f3.one());
  UniPoly g2 = cover_cubic_g1(-f3.one(), f3.one());
  CHECK(T.curve.sextic == (g1 * g2) * f3.one());
  CHECK(is_separable(T.curve.sextic));
  CHECK(T.curve.twist == f3.one());
  // cotarget of (b,c) = target of (-b,c).
  CoverTriple S = build_cover(-f3.one(), f3.one());
  CHECK(T.cotarget.b == S.target.b);
  CHECK(T.cotarget.c == S.target.c);
  // Moduli coordinate is preserved by (b, c) -> (b r^4, c r^6).
  const FieldDesc& f9 = FieldDesc::get(2);
  for (uint32_t rv = 1; rv < 9; ++rv) {
    Felt r = f9.element(rv);
    Felt b = f9.gen(), c = f9.element(5);
    Felt t1 = c.square() / b.pow(3);
    Felt t2 = (c * r.pow(6)).square() / (b * r.pow(4)).pow(3);
    CHECK(t1 == t2);
  }
}

TEST_CASE("phi_eval lands on the target") {
  const FieldDesc& f27 = FieldDesc::get(3);
  const Embedding& id = Embedding::get(3, 3);
  CoverTriple T = build_cover(f27.one(), f27.one());
  long long mapped = 0;
  for (uint32_t vv = 0; vv < 27; ++vv)
    for (uint32_t wv = 0; wv < 27; ++wv) {
      Felt v = f27.element(vv), w = f27.element(wv);
      if (w.square() != T.curve.twist * T.curve.sextic.eval(v)) continue;
      // phi_eval asserts the on-curve identity internally.
      CHECK_NOTHROW(phi_eval(T, id, v, w));
      CHECK_NOTHROW(phi_prime_eval(T, id, v, w));
      ++mapped;
    }
  CHECK(mapped > 0);
  // Off-curve input is rejected.
  Felt bad_v = f27.zero();
  Felt val = T.curve.sextic.eval(bad_v);
  Felt bad_w = f27.one();
  while (bad_w.square() == val) bad_w = bad_w + f27.one();
  CHECK_THROWS(phi_eval(T, id, bad_v, bad_w));
}

TEST_CASE("cover degree accounting: geometric fibers over E(F_9)") {
  // Degree 3 with exactly two ramification points: geometric fibers (taken
  // in F_3^12, which splits every fiber of an F_9-rational base point) have
  // size 3 everywhere except over the two branch points (0, +-sqrt(c)),
  // whose fibers have size 2.
  const FieldDesc& f9 = FieldDesc::get(2);
  const Embedding& up = Embedding::get(2, 12);
  Felt b = f9.one(), c = f9.one();
  CoverTriple T = build_cover(b, c);
  UniPoly g1 = cover_cubic_g1(b, c);

  auto [inf1, inf2] = phi_infinity_images(T, up);
  int branch_seen = 0, regular_seen = 0;
  for (const EllPoint& P : ell_points(T.target)) {
    int n = 0;
    if (P.inf) {
      // Fiber over infinity: the zeros of g1, each with w = 0.
      n = static_cast<int>(roots_in(g1, up).size());
    } else {
      // Solve x(v) = x0: -bc(v - b) = x0 g1(v), a cubic over F_9 whose roots
      // lie in F_3^6 subset F_3^12.
      UniPoly lin = UniPoly::from_felts({b * b * c, -b * c});  // -bc(v-b)
      UniPoly q = lin - g1 * P.x;
      EllPoint Pup = EllPoint::affine(up.map(P.x), up.map(P.y));
      for (const Felt& v : roots_in(q, up)) {
        Felt val = up.map(T.curve.twist) *
                   T.curve.sextic.map_coeffs(up).eval(v);
        auto w = square_root(val);
        REQUIRE(w.has_value());
        if (phi_eval(T, up, v, *w) == Pup) ++n;
        if (!w->is_zero() && phi_eval(T, up, v, -*w) == Pup) ++n;
      }
      if (inf1 == Pup) ++n;
      if (inf2 == Pup) ++n;
    }
    bool is_branch = !P.inf && P.x.is_zero() && P.y.square() == c;
    if (is_branch) {
      CHECK(n == 2);
      ++branch_seen;
    } else {
      CHECK(n == 3);
      ++regular_seen;
    }
  }
  CHECK(branch_seen == 2);
  CHECK(regular_seen >= 2);
}

TEST_CASE("splitting_check") {
  // Exhaustive over F_9 (64 pairs) here; F_27 runs in acceptance.
  const FieldDesc& f9 = FieldDesc::get(2);
  for (uint32_t bv = 1; bv < 9; ++bv)
    for (uint32_t cv = 1; cv < 9; ++cv)
      CHECK(splitting_check(build_cover(f9.element(bv), f9.element(cv))));

  // C_{1,c0} over F_27 with Tr(c0) = 0, c0 != 0: Weil quartic (x^2+q)^2.
  const FieldDesc& f27 = FieldDesc::get(3);
  for (uint32_t cv = 1; cv < 27; ++cv) {
    Felt c0 = f27.element(cv);
    if (abs_trace(c0) != 0) continue;
    CoverTriple T = build_cover(f27.one(), c0);
    WeilQuartic W = weil_of_curve(T.curve);
    CHECK(W.s1 == 0);
    CHECK(W.s2 == 54);  // (x^2+q)^2 = x^4 + 2q x^2 + q^2
  }
}

TEST_CASE("table3_classify") {
  const FieldDesc& f9 = FieldDesc::get(2);
  Felt i = unit_i(f9);
  // Row 1 at q = 9: b = 1, Tr_{F_9/F_9}(c) = c, kernel is c = 0 only — which
  // is excluded; instead verify rows via the exhaustive conformance sweep.
  for (uint32_t bv = 1; bv < 9; ++bv)
    for (uint32_t cv = 1; cv < 9; ++cv) {
      Felt b = f9.element(bv), c = f9.element(cv);
      auto [s, t] = table3_classify(b, c);
      CoverTriple T = build_cover(b, c);
      WeilQuadratic w1 = ell_weil(T.target);
      WeilQuadratic w2 = ell_weil(T.cotarget);
      bool direct = (w1.t == s && w2.t == t);
      bool swapped = (w1.t == t && w2.t == s);
      CHECK((direct || swapped));
      if (chi4(b) == i || chi4(b) == -i) {
        CHECK(s == 0);
        CHECK(t == 0);
      }
    }
  // Sampled conformance over F_81.
  const FieldDesc& f81 = FieldDesc::get(4);
  for (uint32_t bv : {1u, 7u, 20u, 33u, 50u})
    for (uint32_t cv : {2u, 11u, 40u, 77u}) {
      Felt b = f81.element(bv), c = f81.element(cv);
      auto [s, t] = table3_classify(b, c);
      CoverTriple T = build_cover(b, c);
      WeilQuadratic w1 = ell_weil(T.target);
      WeilQuadratic w2 = ell_weil(T.cotarget);
      CHECK(((w1.t == s && w2.t == t) || (w1.t == t && w2.t == s)));
    }
}

TEST_CASE("rescale_cover") {
  const FieldDesc& f9 = FieldDesc::get(2);
  const Embedding& id = Embedding::get(2, 2);
  const Embedding& up = Embedding::get(2, 4);
  CoverTriple T = build_cover(f9.one(), f9.one());
  CHECK(rescale_cover(T, f9.one()).b == T.b);
  CHECK(rescale_cover(T, -f9.one()).b == T.b);   // r^4 = r^6 = 1
  CHECK(rescale_cover(T, -f9.one()).c == T.c);
  long long n1 = count_points(T.curve, id), n2 = count_points(T.curve, up);
  for (uint32_t rv = 1; rv < 9; ++rv) {
    CoverTriple R = rescale_cover(T, f9.element(rv));
    CHECK(count_points(R.curve, id) == n1);
    CHECK(count_points(R.curve, up) == n2);
    CHECK(invariant_I(R.curve) == invariant_I(T.curve));
  }
}

TEST_CASE("reduce_cubic_split_to_cover") {
  const FieldDesc& f9 = FieldDesc::get(2);
  const Embedding& up = Embedding::get(2, 4);
  // Round-trip C_{1,1}: same geometric class.
  {
    CoverTriple T = build_cover(f9.one(), f9.one());
    UniPoly g1 = cover_cubic_g1(f9.one(), f9.one());
    UniPoly g2 = cover_cubic_g1(-f9.one(), f9.one());
    CoverReduction R = reduce_cubic_split_to_cover(T.curve, g1, g2);
    CHECK(!R.u.is_zero());
    Genus2Curve C2 = build_cover(R.u, R.c).curve;
    CHECK(invariant_I(C2) == invariant_I(T.curve));
    CHECK(count_points(C2, up) == count_points(T.curve, up));
  }
  // All covers over F_9: reducing the defining factorization passes the
  // N_2 check against C_{u,c}.
  for (uint32_t bv = 1; bv < 9; ++bv)
    for (uint32_t cv = 1; cv < 9; ++cv) {
      Felt b = f9.element(bv), c = f9.element(cv);
      CoverTriple T = build_cover(b, c);
      CoverReduction R = reduce_cubic_split_to_cover(
          T.curve, cover_cubic_g1(b, c), cover_cubic_g1(-b, c));
      Genus2Curve C2 = build_cover(R.u, R.c).curve;
      CHECK(count_points(C2, up) == count_points(T.curve, up));
    }
}

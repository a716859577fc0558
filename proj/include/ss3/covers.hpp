#pragma once

#include "ss3/elliptic.hpp"
#include "ss3/genus2.hpp"

namespace ss3 {

/// The triple cover C_{b,c} -> E_{b,c} (and its companion to E_{-b,c}):
///   C_{b,c}: w^2 = c * g1(v) * g2(v) with
///   g1 = v^3 - b v^2 - b^2 v + b^3 - c^2,
///   g2 = v^3 + b v^2 - b^2 v - b^3 - c^2.
struct CoverTriple {
  Felt b, c;
  Genus2Curve curve;
  EllipticCurve target;    // E_{b,c}
  EllipticCurve cotarget;  // E_{-b,c}
};

/// The cubic g1 (denominator of the cover map); g2 is g1 with b negated.
UniPoly cover_cubic_g1(const Felt& b, const Felt& c);

CoverTriple build_cover(const Felt& b, const Felt& c);

/// Evaluates the cover map at an affine point (v, w) of C_{b,c} over the
/// target of ext: x = -bc(v-b)/g1(v), z = -w/g1(v), y = (z^3 + bxz)/c, with
/// poles of x (the zeros of g1) mapping to the point at infinity.
EllPoint phi_eval(const CoverTriple& T, const Embedding& ext, const Felt& v,
                  const Felt& w);

/// The companion map to E_{-b,c} (b replaced by -b throughout).
EllPoint phi_prime_eval(const CoverTriple& T, const Embedding& ext,
                        const Felt& v, const Felt& w);

/// The frozen convention for the images of the two points of C_{b,c} at
/// infinity: x -> 0 as v -> infinity, so they map to (0, s) and (0, -s)
/// for s a square root of c over the counting field.
std::pair<EllPoint, EllPoint> phi_infinity_images(const CoverTriple& T,
                                                  const Embedding& ext);

/// Weil quartic of the curve equals the product of the Weil quadratics of
/// the two elliptic targets.
bool splitting_check(const CoverTriple& T);

/// Even-degree splitting table: the pair (s, t) with Weil polynomial
/// (x^2 - sx + q)(x^2 - tx + q) of C_{b,c}, determined by chi4(b) and the
/// relative trace of c/b^(3/2) to F_9.
std::pair<long long, long long> table3_classify(const Felt& b, const Felt& c);

CoverTriple rescale_cover(const CoverTriple& T, const Felt& r);

struct CoverReduction {
  Felt u, c;
  bool twist_flag;
};

/// Given a supersingular sextic model whose polynomial splits into the two
/// rational cubics lc*g1*g2, produces (u, c) with a quadratic twist of the
/// curve isomorphic to C_{u,c}; verified by twist-insensitive N2 comparison.
CoverReduction reduce_cubic_split_to_cover(const Genus2Curve& C,
                                           const UniPoly& g1,
                                           const UniPoly& g2);

}  // namespace ss3

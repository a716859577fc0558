#pragma once

#include "ss3/gf3.hpp"
#include "ss3/unipoly.hpp"
#include "ss3/weil.hpp"

namespace ss3 {

/// Hyperelliptic model twist * y^2 = f(x) with f separable of degree 5 or 6.
struct Genus2Curve {
  Felt twist;
  UniPoly sextic;

  Genus2Curve(Felt twist_, UniPoly sextic_);
  const FieldDesc& field() const { return sextic.field(); }
  Genus2Curve quadratic_twist() const;
};

/// The canonical supersingular shape twist * y^2 = x^6 + c3 x^3 + c1 x + c0
/// with c1 != 0 (which already forces separability).
struct ReducedSSForm {
  Felt c3, c1, c0;
  Felt twist;

  ReducedSSForm(Felt c3_, Felt c1_, Felt c0_, Felt twist_);
  Genus2Curve curve() const;
};

/// Weighted-projective Igusa invariants, weights (2, 4, 6, 8, 10).
struct IgusaVector {
  Felt J2, J4, J6, J8, J10;
};

/// Whether two Igusa vectors agree up to the weighted scaling
/// J_{2k} -> lambda^{2k} J_{2k} for some nonzero lambda.
bool igusa_equivalent(const IgusaVector& a, const IgusaVector& b);

/// Matrix criterion for supersingularity of a sextic model (degree-5 models
/// must first go through sextic_model).
bool yui_is_supersingular(const Genus2Curve& C);

/// The matrix of the criterion vanishes identically; never happens in
/// characteristic 3 and is exposed so tests can assert exactly that.
bool is_superspecial(const Genus2Curve& C);

/// #C(F) on the smooth model, for F the target of ext.
long long count_points(const Genus2Curve& C, const Embedding& ext);

/// Counts over F_q and F_{q^2} and reconstructs the quartic.
WeilQuartic weil_of_curve(const Genus2Curve& C);

IgusaVector igusa_reduced(const ReducedSSForm& r);

/// J6^5 / J10^3 of the reduced form; the coordinate on the supersingular
/// moduli line.  Reduces first; throws on non-supersingular input.
Felt invariant_I(const Genus2Curve& C);

/// Puts a supersingular sextic model into ReducedSSForm; self-checks by
/// comparing (N1, N2) of input and output.
ReducedSSForm reduce_to_standard_form(const Genus2Curve& C);

/// Converts a degree-5 model to an equivalent degree-6 model by moving a
/// rational non-Weierstrass point; point counts are preserved (checked).
Genus2Curve sextic_model(const Genus2Curve& C);

/// The standard representative with invariant I: y^2 = x^6 + I^2 x^3 + I^3 x
/// + I^4 when I != 0, and y^2 = x^5 + 1 when I = 0.
Genus2Curve curve_from_invariant(const Felt& I);

/// 2 when invariant_I != 0, 10 when it is 0.
int geometric_aut_order(const Genus2Curve& C);

}  // namespace ss3

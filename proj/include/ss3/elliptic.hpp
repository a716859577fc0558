#pragma once

#include "ss3/gf3.hpp"
#include "ss3/weil.hpp"

namespace ss3 {

/// y^2 = x^3 - bx + c with b != 0; every such curve is supersingular.
struct EllipticCurve {
  Felt b;
  Felt c;

  EllipticCurve(Felt b_, Felt c_);
  const FieldDesc& field() const { return b.field(); }
  /// Evaluates x^3 - bx + c.
  Felt rhs(const Felt& x) const;
  /// The same curve viewed over the target of ext.
  EllipticCurve base_change(const Embedding& ext) const;
};

/// A point on an EllipticCurve: infinity or an affine (x, y) pair.
struct EllPoint {
  bool inf = true;
  Felt x, y;

  static EllPoint infinity() { return EllPoint{}; }
  static EllPoint affine(Felt x, Felt y) { return EllPoint{false, x, y}; }
  bool operator==(const EllPoint& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
};

enum class TwistLabel {
  // even degree
  ONE,
  MINUS_ONE,
  OMEGA,
  MINUS_OMEGA,
  IOTA,
  MINUS_IOTA,
  // odd degree
  PM_ONE,
  OMEGA_PAIR,
  MINUS_OMEGA_PAIR,
  IOTA_ORBIT,
};

const char* twist_label_name(TwistLabel l);

/// The row of the twist table a curve falls into, with the table's predicted
/// trace of Frobenius and number of rational automorphisms.
struct TwistClass {
  TwistLabel label;
  long long predicted_trace;
  int predicted_aut;
};

long long ell_count(const EllipticCurve& E, const Embedding& ext);

TwistClass classify_twist(const EllipticCurve& E);

/// Counts points and returns x^2 - tx + q; throws if the counted trace
/// disagrees with the classify_twist prediction.
WeilQuadratic ell_weil(const EllipticCurve& E);

EllPoint ell_neg(const EllipticCurve& E, const EllPoint& P);
EllPoint ell_add(const EllipticCurve& E, const EllPoint& P, const EllPoint& Q);
bool on_curve(const EllipticCurve& E, const EllPoint& P);

/// All rational points of E over its own field.
std::vector<EllPoint> ell_points(const EllipticCurve& E);

/// Checks the endomorphism relations of y^2 = x^3 - x pointwise over the
/// given field (which must contain F_9 so that iota is defined):
/// iota*omega = omega^2*iota, iota*pi = -pi*iota, omega*pi = pi*omega,
/// pi = 1 + 2*omega.
bool verify_endo_relations(const FieldDesc& field);

/// Number of substitutions x -> u^2 x + r, y -> u^3 y over the base field
/// preserving the equation.
int aut_order_rational(const EllipticCurve& E);

}  // namespace ss3

#include "ss3/elliptic.hpp"

#include <stdexcept>

namespace ss3 {

EllipticCurve::EllipticCurve(Felt b_, Felt c_) : b(b_), c(c_) {
  if (b.is_zero()) throw std::invalid_argument("b must be nonzero");
  if (&b.field() != &c.field())
    throw std::invalid_argument("b and c over different fields");
}

Felt EllipticCurve::rhs(const Felt& x) const { return x * x * x - b * x + c; }

EllipticCurve EllipticCurve::base_change(const Embedding& ext) const {
  if (&ext.source() != &field())
    throw std::invalid_argument("embedding source must be the curve's field");
  return EllipticCurve(ext.map(b), ext.map(c));
}

const char* twist_label_name(TwistLabel l) {
  switch (l) {
    case TwistLabel::ONE: return "one";
    case TwistLabel::MINUS_ONE: return "minus_one";
    case TwistLabel::OMEGA: return "omega";
    case TwistLabel::MINUS_OMEGA: return "minus_omega";
    case TwistLabel::IOTA: return "iota";
    case TwistLabel::MINUS_IOTA: return "minus_iota";
    case TwistLabel::PM_ONE: return "pm_one";
    case TwistLabel::OMEGA_PAIR: return "omega_pair";
    case TwistLabel::MINUS_OMEGA_PAIR: return "minus_omega_pair";
    case TwistLabel::IOTA_ORBIT: return "iota_orbit";
  }
  return "?";
}

long long ell_count(const EllipticCurve& E, const Embedding& ext) {
  EllipticCurve EF = E.base_change(ext);
  const FieldDesc& F = ext.target();
  long long n = 1;  // the point at infinity
  for (uint32_t v = 0; v < F.order(); ++v) {
    Felt val = EF.rhs(F.element(v));
    n += val.is_zero() ? 1 : 1 + chi2(val);
  }
  return n;
}

namespace {

// (-3)^k as an exact integer.
long long minus3_pow(int k) {
  long long r = 1;
  for (int j = 0; j < k; ++j) r *= -3;
  return r;
}

}  // namespace

TwistClass classify_twist(const EllipticCurve& E) {
  const FieldDesc& k = E.field();
  int d = k.degree();
  if (d % 2 == 1) {
    if (chi2(E.b) == -1) return {TwistLabel::IOTA_ORBIT, 0, 2};
    Felt sb = s_of_b(E.b);
    int t = abs_trace(E.c / (sb * sb * sb));
    long long m = minus3_pow((d + 1) / 2);
    switch (t) {
      case 0: return {TwistLabel::PM_ONE, 0, 6};
      case 1: return {TwistLabel::OMEGA_PAIR, m, 6};
      default: return {TwistLabel::MINUS_OMEGA_PAIR, -m, 6};
    }
  }
  Felt x4 = chi4(E.b);
  Felt i = unit_i(k);
  long long m = minus3_pow(d / 2);
  if (x4 == i) return {TwistLabel::MINUS_IOTA, 0, 4};
  if (x4 == -i) return {TwistLabel::IOTA, 0, 4};
  auto rb = square_root(E.b);
  if (!rb) throw std::logic_error("chi4(b) = +-1 but b has no square root");
  bool tr0 = abs_trace(E.c / (*rb * *rb * *rb)) == 0;
  if (x4 == k.one()) {
    return tr0 ? TwistClass{TwistLabel::ONE, 2 * m, 12}
               : TwistClass{TwistLabel::OMEGA, -m, 6};
  }
  return tr0 ? TwistClass{TwistLabel::MINUS_ONE, -2 * m, 12}
             : TwistClass{TwistLabel::MINUS_OMEGA, m, 6};
}

WeilQuadratic ell_weil(const EllipticCurve& E) {
  const FieldDesc& k = E.field();
  long long q = static_cast<long long>(k.order());
  long long N = ell_count(E, Embedding::get(k.degree(), k.degree()));
  long long t = q + 1 - N;
  TwistClass cls = classify_twist(E);
  if (t != cls.predicted_trace)
    throw std::logic_error("counted trace disagrees with the table row");
  return WeilQuadratic(t, q);
}

bool on_curve(const EllipticCurve& E, const EllPoint& P) {
  if (P.inf) return true;
  return P.y * P.y == E.rhs(P.x);
}

EllPoint ell_neg(const EllipticCurve& E, const EllPoint& P) {
  (void)E;
  if (P.inf) return P;
  return EllPoint::affine(P.x, -P.y);
}

EllPoint ell_add(const EllipticCurve& E, const EllPoint& P, const EllPoint& Q) {
  if (!on_curve(E, P) || !on_curve(E, Q))
    throw std::invalid_argument("points must lie on the curve");
  if (P.inf) return Q;
  if (Q.inf) return P;
  const FieldDesc& k = E.field();
  Felt lambda;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return EllPoint::infinity();
    // Tangent: slope = (3x^2 - b) / 2y = -b / 2y in characteristic 3.
    lambda = (-E.b) / (k.from_int(2) * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  Felt x3 = lambda * lambda - P.x - Q.x;
  Felt y3 = lambda * (P.x - x3) - P.y;
  return EllPoint::affine(x3, y3);
}

std::vector<EllPoint> ell_points(const EllipticCurve& E) {
  const FieldDesc& k = E.field();
  std::vector<EllPoint> pts;
  pts.push_back(EllPoint::infinity());
  for (uint32_t v = 0; v < k.order(); ++v) {
    Felt x = k.element(v);
    Felt val = E.rhs(x);
    if (val.is_zero()) {
      pts.push_back(EllPoint::affine(x, k.zero()));
    } else if (chi2(val) == 1) {
      Felt y = *square_root(val);
      pts.push_back(EllPoint::affine(x, y));
      pts.push_back(EllPoint::affine(x, -y));
    }
  }
  return pts;
}

bool verify_endo_relations(const FieldDesc& field) {
  if (field.degree() % 2 != 0)
    throw std::invalid_argument("field must contain F_9");
  Felt i = unit_i(field);
  EllipticCurve E(field.one(), field.zero());  // y^2 = x^3 - x
  auto iota = [&](const EllPoint& P) {
    return P.inf ? P : EllPoint::affine(-P.x, i * P.y);
  };
  auto omega = [&](const EllPoint& P) {
    return P.inf ? P : EllPoint::affine(P.x - field.one(), P.y);
  };
  auto pi = [&](const EllPoint& P) {
    return P.inf ? P : EllPoint::affine(P.x.frobenius(), P.y.frobenius());
  };
  for (const EllPoint& P : ell_points(E)) {
    if (!(iota(omega(P)) == omega(omega(iota(P))))) return false;
    if (!(iota(pi(P)) == ell_neg(E, pi(iota(P))))) return false;
    if (!(omega(pi(P)) == pi(omega(P)))) return false;
    EllPoint sum = ell_add(E, P, ell_add(E, omega(P), omega(P)));
    if (!(pi(P) == sum)) return false;
  }
  return true;
}

int aut_order_rational(const EllipticCurve& E) {
  const FieldDesc& k = E.field();
  int n = 0;
  for (uint32_t uv = 1; uv < k.order(); ++uv) {
    Felt u = k.element(uv);
    Felt u4 = u.pow(4);
    if (!(u4 == k.one())) continue;
    Felt u6 = u4 * u * u;
    for (uint32_t rv = 0; rv < k.order(); ++rv) {
      Felt r = k.element(rv);
      // x -> u^2 x + r, y -> u^3 y preserves y^2 = x^3 - bx + c iff
      // b u^-4 = b (automatic here) and u^-6 (r^3 - br + c) = c.
      if ((r * r * r - E.b * r + E.c) == u6 * E.c) ++n;
    }
  }
  return n;
}

}  // namespace ss3

#include "ss3/genus2.hpp"

#include <array>
#include <stdexcept>

namespace ss3 {

Genus2Curve::Genus2Curve(Felt twist_, UniPoly sextic_)
    : twist(twist_), sextic(std::move(sextic_)) {
  if (twist.is_zero()) throw std::invalid_argument("twist must be nonzero");
  if (&twist.field() != &sextic.field())
    throw std::invalid_argument("twist and sextic over different fields");
  int n = sextic.degree();
  if (n != 5 && n != 6)
    throw std::invalid_argument("model must have degree 5 or 6");
  if (!is_separable(sextic))
    throw std::invalid_argument("sextic must be separable");
}

Genus2Curve Genus2Curve::quadratic_twist() const {
  return Genus2Curve(twist * smallest_nonsquare(field()), sextic);
}

ReducedSSForm::ReducedSSForm(Felt c3_, Felt c1_, Felt c0_, Felt twist_)
    : c3(c3_), c1(c1_), c0(c0_), twist(twist_) {
  if (c1.is_zero()) throw std::invalid_argument("c1 must be nonzero");
  if (twist.is_zero()) throw std::invalid_argument("twist must be nonzero");
}

Genus2Curve ReducedSSForm::curve() const {
  const FieldDesc& k = c1.field();
  return Genus2Curve(
      twist, UniPoly::from_felts({c0, c1, k.zero(), c3, k.zero(), k.zero(),
                                  k.one()}));
}

namespace {

// Entries of the criterion matrix [[c2, c1], [c5, c4]] of the monic model.
std::array<Felt, 4> yui_matrix(const Genus2Curve& C) {
  if (C.sextic.degree() != 6)
    throw std::invalid_argument("criterion needs a sextic model");
  UniPoly m = C.sextic.monic();
  return {m.coeff(2), m.coeff(1), m.coeff(5), m.coeff(4)};
}

}  // namespace

bool yui_is_supersingular(const Genus2Curve& C) {
  auto [c2, c1, c5, c4] = yui_matrix(C);
  auto cube = [](const Felt& x) { return x * x * x; };
  // [[c2,c1],[c5,c4]] * [[c2^3,c1^3],[c5^3,c4^3]] = 0
  return (c2 * cube(c2) + c1 * cube(c5)).is_zero() &&
         (c2 * cube(c1) + c1 * cube(c4)).is_zero() &&
         (c5 * cube(c2) + c4 * cube(c5)).is_zero() &&
         (c5 * cube(c1) + c4 * cube(c4)).is_zero();
}

bool is_superspecial(const Genus2Curve& C) {
  auto [c2, c1, c5, c4] = yui_matrix(C);
  return c2.is_zero() && c1.is_zero() && c5.is_zero() && c4.is_zero();
}

long long count_points(const Genus2Curve& C, const Embedding& ext) {
  if (&ext.source() != &C.field())
    throw std::invalid_argument("embedding source must be the curve's field");
  const FieldDesc& F = ext.target();
  UniPoly g = C.sextic.map_coeffs(ext) * ext.map(C.twist);
  long long n = 0;
  for (uint32_t v = 0; v < F.order(); ++v) {
    Felt val = g.eval(F.element(v));
    n += val.is_zero() ? 1 : 1 + chi2(val);
  }
  if (C.sextic.degree() == 5) {
    n += 1;
  } else {
    n += 1 + chi2(g.lc());
  }
  return n;
}

WeilQuartic weil_of_curve(const Genus2Curve& C) {
  int d = C.field().degree();
  long long N1 = count_points(C, Embedding::get(d, d));
  long long N2 = count_points(C, Embedding::get(d, 2 * d));
  return weil_from_counts(N1, N2, static_cast<long long>(C.field().order()));
}

IgusaVector igusa_reduced(const ReducedSSForm& r) {
  const FieldDesc& k = r.c1.field();
  Felt J6 = r.c3.pow(6) - r.c3 * r.c1.pow(3) - r.c0.pow(3);
  Felt J10 = -(r.c1.pow(6));
  return IgusaVector{k.zero(), k.zero(), J6, k.zero(), J10};
}

bool igusa_equivalent(const IgusaVector& a, const IgusaVector& b) {
  const FieldDesc& k = a.J10.field();
  if (a.J10.is_zero() || b.J10.is_zero())
    throw std::invalid_argument("J10 must be nonzero");
  for (uint32_t v = 1; v < k.order(); ++v) {
    Felt l = k.element(v);
    if (b.J2 == a.J2 * l.pow(2) && b.J4 == a.J4 * l.pow(4) &&
        b.J6 == a.J6 * l.pow(6) && b.J8 == a.J8 * l.pow(8) &&
        b.J10 == a.J10 * l.pow(10))
      return true;
  }
  return false;
}

ReducedSSForm reduce_to_standard_form(const Genus2Curve& C) {
  if (C.sextic.degree() != 6)
    throw std::invalid_argument("reduce a sextic model (use sextic_model first)");
  if (!yui_is_supersingular(C))
    throw std::invalid_argument("curve is not supersingular");
  const FieldDesc& k = C.field();

  Felt tw = C.twist * C.sextic.lc();
  UniPoly f = C.sextic.monic();

  if (!f.coeff(5).is_zero()) {
    // Translate x to kill the x^4 coefficient: it is 2*c5*t + c4 in f(x+t).
    Felt t = -(f.coeff(4) / (k.from_int(2) * f.coeff(5)));
    f = f.compose(UniPoly::from_felts({t, k.one()}));
    if (!f.coeff(4).is_zero() || !f.coeff(2).is_zero() ||
        !f.coeff(1).is_zero())
      throw std::logic_error("translation did not reach the expected shape");
    if (f.coeff(0).is_zero())
      throw std::logic_error("separable model cannot have c0 = 0 here");
    // x -> 1/x: reverse coefficients, then renormalize to a monic sextic.
    f = f.reversed(6);
    Felt c0 = f.lc();
    tw = tw * c0;
    f = f.monic();
  }

  if (!f.coeff(5).is_zero() || !f.coeff(4).is_zero() || !f.coeff(2).is_zero())
    throw std::logic_error("supersingular sextic did not reduce");
  ReducedSSForm out(f.coeff(3), f.coeff(1), f.coeff(0), tw);

  // Isomorphism sanity check: both models must have the same point counts.
  int d = k.degree();
  Genus2Curve R = out.curve();
  if (count_points(C, Embedding::get(d, d)) !=
          count_points(R, Embedding::get(d, d)) ||
      count_points(C, Embedding::get(d, 2 * d)) !=
          count_points(R, Embedding::get(d, 2 * d)))
    throw std::logic_error("reduced form has different point counts");
  return out;
}

Genus2Curve sextic_model(const Genus2Curve& C) {
  if (C.sextic.degree() != 5)
    throw std::invalid_argument("input must be a degree-5 model");
  const FieldDesc& k = C.field();
  int d = k.degree();
  const Embedding& id = Embedding::get(d, d);

  for (uint32_t v = 0; v < k.order(); ++v) {
    Felt x0 = k.element(v);
    Felt val = C.twist * C.sextic.eval(x0);
    if (val.is_zero()) continue;  // x0 must not be a Weierstrass x-coordinate
    // x = x0 + 1/u, y = w/u^3 turns twist*y^2 = f(x) into twist*w^2 = g(u)
    // with g(u) = u^6 f(x0 + 1/u).
    UniPoly h = C.sextic.compose(UniPoly::from_felts({x0, k.one()}));
    UniPoly g = h.reversed(6);
    Genus2Curve out(C.twist, g);
    if (count_points(C, id) != count_points(out, id))
      throw std::logic_error("degree-6 model has a different point count");
    return out;
  }
  throw std::runtime_error("no rational non-Weierstrass point found");
}

Felt invariant_I(const Genus2Curve& C) {
  Genus2Curve S = C.sextic.degree() == 5 ? sextic_model(C) : C;
  ReducedSSForm r = reduce_to_standard_form(S);
  IgusaVector J = igusa_reduced(r);
  return J.J6.pow(5) / J.J10.pow(3);
}

Genus2Curve curve_from_invariant(const Felt& I) {
  const FieldDesc& k = I.field();
  if (I.is_zero()) {
    return Genus2Curve(k.one(),
                       UniPoly::from_ints(k, {1, 0, 0, 0, 0, 1}));  // x^5 + 1
  }
  return Genus2Curve(
      k.one(), UniPoly::from_felts({I.pow(4), I.pow(3), k.zero(), I.square(),
                                    k.zero(), k.zero(), k.one()}));
}

int geometric_aut_order(const Genus2Curve& C) {
  return invariant_I(C).is_zero() ? 10 : 2;
}

}  // namespace ss3

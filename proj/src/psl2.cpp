#include "ss3/psl2.hpp"

#include "ss3/weil.hpp"

#include <stdexcept>

namespace ss3 {

namespace {

int log3(long long n) {
  int d;
  if (!is_power_of_3(n, &d)) throw std::invalid_argument("not a power of 3");
  return d;
}

const FieldDesc& coeff_field(int r) {
  switch (r) {
    case 3: return FieldDesc::get(1);
    case 9: return FieldDesc::get(2);
    default: throw std::invalid_argument("r must be 3 or 9");
  }
}

// z^n - z
UniPoly znz(const FieldDesc& k, int n) {
  std::vector<uint32_t> v(n + 1, 0);
  v[1] = k.from_int(-1).packed();
  v[n] = 1;
  return UniPoly(k, std::move(v));
}

}  // namespace

RationalFn build_F(int r) {
  const FieldDesc& k = coeff_field(r);
  UniPoly num = znz(k, r * r).pow((r + 1) / 2);
  UniPoly den = znz(k, r).pow((r * r + 1) / 2);
  UniPoly g = gcd(num, den);
  RationalFn F{(num / g).monic(), (den / g).monic()};
  int order = r * (r * r - 1) / 2;  // #PSL2(F_r)
  if (F.degree() != order)
    throw std::logic_error("degree of F does not match the group order");
  return F;
}

bool invariant_under(const RationalFn& F, const UniPoly& num_sub,
                     const UniPoly& den_sub) {
  const FieldDesc& k = F.num.field();
  int M = F.degree();
  // A = d^M * num(n/d), B = d^M * den(n/d), computed by Horner.
  auto subst = [&](const UniPoly& p) {
    UniPoly acc(k);
    for (int i = M; i >= 0; --i) {
      acc = acc * num_sub;
      if (i <= p.degree() && !p.coeff(i).is_zero())
        acc = acc + UniPoly::constant(p.coeff(i)) * den_sub.pow(M - i);
    }
    return acc;
  };
  UniPoly A = subst(F.num), B = subst(F.den);
  return A * F.den == B * F.num;
}

bool check_invariance(int r) {
  const FieldDesc& k = coeff_field(r);
  RationalFn F = build_F(r);
  UniPoly one = UniPoly::from_ints(k, {1});
  for (uint32_t v = 0; v < static_cast<uint32_t>(r); ++v) {
    // z -> z + a
    UniPoly n = UniPoly::from_felts({k.element(v), k.one()});
    if (!invariant_under(F, n, one)) return false;
  }
  // z -> -1/z
  UniPoly n = UniPoly::from_ints(k, {-1});
  UniPoly d = UniPoly::x(k);
  return invariant_under(F, n, d);
}

bool check_separability(int r, const Felt& e) {
  if (e.is_zero()) throw std::invalid_argument("e must be nonzero");
  const FieldDesc& k = e.field();
  UniPoly base = znz(k, r);
  UniPoly P = (base.pow(r - 1) + UniPoly::from_ints(k, {1})).pow((r + 1) / 2) -
              base.pow(r * (r - 1) / 2) * e;
  return is_separable(P);
}

namespace {

Felt lemma_value(const Felt& c, int r) {
  const FieldDesc& k = c.field();
  return (c.pow(r - 1) + k.one()).pow((r + 1) / 2) / c.pow(r * (r - 1) / 2);
}

}  // namespace

bool verify_trace_zero_criterion(int r, long long q) {
  int dr = log3(r), dq = log3(q);
  if (dq % dr != 0) throw std::invalid_argument("F_r must sit inside F_q");
  const FieldDesc& K = FieldDesc::get(2 * dq);
  const Embedding& down = Embedding::get(dr, 2 * dq);
  for (uint32_t v = 1; v < K.order(); ++v) {
    Felt c = K.element(v);
    if (c.frobenius(dq) == c) continue;  // c in F_q
    Felt val = lemma_value(c, r);
    if (!(val.frobenius(dq) == val)) continue;  // value outside F_q
    if (!rel_trace(c, down).is_zero()) return false;
  }
  return true;
}

bool splits_completely_for(const Felt& c, int r) {
  const FieldDesc& k = c.field();
  Felt e = lemma_value(c, r);
  std::vector<Felt> coeffs(r * (r - 1) / 2 + 1, k.zero());
  // (z^(r-1) + 1)^((r+1)/2) - e z^(r(r-1)/2)
  UniPoly zr1 = UniPoly::from_ints(k, {1});
  {
    std::vector<uint32_t> v(r, 0);
    v[0] = 1;
    v[r - 1] = 1;
    zr1 = UniPoly(k, std::move(v));
  }
  UniPoly P = zr1.pow((r + 1) / 2);
  {
    std::vector<uint32_t> v(r * (r - 1) / 2 + 1, 0);
    v[r * (r - 1) / 2] = e.packed();
    P = P - UniPoly(k, std::move(v));
  }
  UniPoly rad = P / gcd(P, P.derivative());
  if (rad.degree() == 0) return true;
  UniPoly h = UniPoly::frobenius_power_mod(rad, 1);
  return h == UniPoly::x(k) % rad;
}

bool verify_complete_splitting(int r, long long Q) {
  int dr = log3(r), dQ = log3(Q);
  if (dQ % dr != 0) throw std::invalid_argument("F_r must sit inside F_Q");
  const FieldDesc& K = FieldDesc::get(dQ);
  const Embedding& down = Embedding::get(dr, dQ);
  for (uint32_t v = 1; v < K.order(); ++v) {
    Felt c = K.element(v);
    if (!rel_trace(c, down).is_zero()) continue;
    if (!splits_completely_for(c, r)) return false;
  }
  return true;
}

SignDescentReport verify_sign_descent(long long q) {
  int dq = log3(q);
  if (dq % 2 == 0) throw std::invalid_argument("q must be an odd power of 3");
  const FieldDesc& K = FieldDesc::get(2 * dq);
  const FieldDesc& k = FieldDesc::get(dq);
  const Embedding& up = Embedding::get(dq, 2 * dq);
  const Embedding& down9 = Embedding::get(2, 2 * dq);

  // Precompute the candidate values (cbar^8+1)^5 / cbar^36 over F_q^*.
  std::vector<Felt> cand;
  for (uint32_t v = 1; v < k.order(); ++v)
    cand.push_back(up.map(lemma_value(k.element(v), 9)));

  SignDescentReport rep{true, 0, 0, 0};
  for (uint32_t v = 1; v < K.order(); ++v) {
    Felt c = K.element(v);
    if (c.frobenius(dq) == c) continue;
    Felt e = lemma_value(c, 9);
    if (!(e.frobenius(dq) == e)) continue;
    if (rel_trace(c, down9).is_zero()) continue;
    rep.qualifying += 1;
    bool plus = false, minus = false;
    for (const Felt& w : cand) {
      if (w == e) plus = true;
      if (w == -e) minus = true;
    }
    if (plus)
      rep.plus_sign += 1;
    else if (minus)
      rep.minus_sign += 1;
    else
      rep.ok = false;
  }
  return rep;
}

namespace {

struct Mat {
  Felt a, b, c, d;
  Mat mul(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  bool is_pm_identity() const {
    const FieldDesc& k = a.field();
    return b.is_zero() && c.is_zero() &&
           ((a == k.one() && d == k.one()) || (a == -k.one() && d == -k.one()));
  }
};

int psl2_order(const Mat& m) {
  Mat p = m;
  int n = 1;
  while (!p.is_pm_identity()) {
    p = p.mul(m);
    ++n;
    if (n > 1000) throw std::logic_error("runaway order computation");
  }
  return n;
}

}  // namespace

std::map<int, int> psl2_order_census(int r) {
  const FieldDesc& k = coeff_field(r);
  std::map<int, int> census;
  for (uint32_t av = 0; av < k.order(); ++av)
    for (uint32_t bv = 0; bv < k.order(); ++bv)
      for (uint32_t cv = 0; cv < k.order(); ++cv)
        for (uint32_t dv = 0; dv < k.order(); ++dv) {
          Mat m{k.element(av), k.element(bv), k.element(cv), k.element(dv)};
          if (!(m.a * m.d - m.b * m.c == k.one())) continue;
          // Canonical representative modulo +-1: lexicographically smaller
          // encoding of (a, b, c, d) versus its negation.
          std::array<uint32_t, 4> key{m.a.enc_key(), m.b.enc_key(),
                                      m.c.enc_key(), m.d.enc_key()};
          std::array<uint32_t, 4> nkey{(-m.a).enc_key(), (-m.b).enc_key(),
                                       (-m.c).enc_key(), (-m.d).enc_key()};
          if (nkey < key) continue;
          census[psl2_order(m)] += 1;
        }
  return census;
}

bool verify_rho_normal_forms() {
  const FieldDesc& k = FieldDesc::get(2);
  Felt i = unit_i(k), one = k.one(), zero = k.zero();
  Mat rho1{one, one + i, zero, one};
  Mat rho2{-one + i, one + i, zero, one + i};
  for (const Mat& rho : {rho1, rho2}) {
    Mat conj{rho.a.frobenius(), rho.b.frobenius(), rho.c.frobenius(),
             rho.d.frobenius()};
    Mat sigma = conj.mul(rho);
    if (psl2_order(sigma) != 3) return false;
  }
  return true;
}

}  // namespace ss3

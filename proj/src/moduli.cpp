#include "ss3/moduli.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ss3 {

ModuliPointA::ModuliPointA(Felt t_) : t(t_) {
  if (t.is_zero()) throw std::invalid_argument("moduli coordinate is nonzero");
}

Felt moduli_map(const Felt& t) {
  if (t.is_zero()) throw std::invalid_argument("t must be nonzero");
  const FieldDesc& k = t.field();
  Felt num = (k.one() + t.pow(4)).pow(5);
  return -num / t.pow(18);
}

Felt eq_invariant(const Felt& c) {
  if (c.is_zero()) throw std::invalid_argument("c must be nonzero");
  const FieldDesc& k = c.field();
  Felt num = (k.one() + c.pow(8)).pow(5);
  return -num / c.pow(36);
}

UniPoly fiber_polynomial(const Felt& I) {
  const FieldDesc& k = I.field();
  // -(1 + t^4)^5 - I t^18
  UniPoly one_plus_t4 = UniPoly::from_ints(k, {1, 0, 0, 0, 1});
  UniPoly p = -(one_plus_t4.pow(5));
  std::vector<uint32_t> it18(19, 0);
  it18[18] = I.packed();
  return p - UniPoly(k, std::move(it18));
}

FiberResult fiber_count(const Felt& I) {
  const FieldDesc& k = I.field();
  UniPoly f = fiber_polynomial(I);
  UniPoly sf = f / gcd(f, f.derivative());  // squarefree part
  auto counts = factor_degree_counts(sf);
  int e = 1;
  for (auto [deg, n] : counts) {
    (void)n;
    e = std::lcm(e, deg);
  }
  FiberResult out;
  out.distinct_roots = sf.degree();
  out.splitting_degree_over_f3 = k.degree() * e;
  out.roots_listed = out.splitting_degree_over_f3 <= kMaxDegree;
  if (out.roots_listed) {
    const Embedding& up = Embedding::get(k.degree(), out.splitting_degree_over_f3);
    out.roots = roots_in(sf, up);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Felt& a, const Felt& b) {
                return a.enc_key() < b.enc_key();
              });
    if (static_cast<int>(out.roots.size()) != out.distinct_roots)
      throw std::logic_error("root count mismatch over the splitting field");
    for (const Felt& r : out.roots)
      if (r.is_zero()) throw std::logic_error("t = 0 cannot be a fiber root");
  }
  return out;
}

uint8_t TwoTorsionModel::normalize(uint8_t mask) {
  uint8_t comp = static_cast<uint8_t>(~mask & 0x3F);
  return std::min(mask, comp);
}

std::vector<uint8_t> TwoTorsionModel::elements() {
  std::vector<uint8_t> out;
  for (uint8_t m = 0; m < 64; ++m)
    if (std::popcount(m) % 2 == 0 && normalize(m) == m) out.push_back(m);
  if (out.size() != 16) throw std::logic_error("expected 16 classes");
  return out;
}

uint8_t TwoTorsionModel::add(uint8_t a, uint8_t b) {
  return normalize(static_cast<uint8_t>(a ^ b));
}

int TwoTorsionModel::pairing(uint8_t a, uint8_t b) {
  return std::popcount(static_cast<uint8_t>(a & b)) % 2;
}

std::vector<Order4Subgroup> all_order4_subgroups() {
  auto els = TwoTorsionModel::elements();
  std::vector<Order4Subgroup> out;
  for (size_t i = 1; i < els.size(); ++i)
    for (size_t j = i + 1; j < els.size(); ++j) {
      uint8_t s = TwoTorsionModel::add(els[i], els[j]);
      Order4Subgroup g{0, els[i], els[j], s};
      std::sort(g.begin(), g.end());
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupCensus subgroup_census() {
  SubgroupCensus c{0, 0, 0};
  for (const auto& g : all_order4_subgroups()) {
    ++c.total;
    bool iso = true;
    for (uint8_t a : g)
      for (uint8_t b : g)
        if (TwoTorsionModel::pairing(a, b) != 0) iso = false;
    (iso ? c.isotropic : c.nonisotropic) += 1;
  }
  return c;
}

Order4Subgroup kappa_of_cubic(const std::set<int>& roots_of_g) {
  if (roots_of_g.size() != 3)
    throw std::invalid_argument("need exactly three root labels");
  std::vector<int> r(roots_of_g.begin(), roots_of_g.end());
  for (int lbl : r)
    if (lbl < 0 || lbl > 5) throw std::invalid_argument("labels are 0..5");
  auto pair_mask = [](int a, int b) {
    return TwoTorsionModel::normalize(
        static_cast<uint8_t>((1 << a) | (1 << b)));
  };
  Order4Subgroup g{0, pair_mask(r[0], r[1]), pair_mask(r[0], r[2]),
                   pair_mask(r[1], r[2])};
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace ss3

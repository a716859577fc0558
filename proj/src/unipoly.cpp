#include "ss3/unipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ss3 {

UniPoly::UniPoly(const FieldDesc& f, std::vector<uint32_t> coeffs)
    : field_(&f), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::from_felts(const std::vector<Felt>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("need at least one coeff");
  const FieldDesc& f = coeffs.front().field();
  std::vector<uint32_t> raw;
  raw.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (&c.field() != &f) throw std::invalid_argument("mixed-field coeffs");
    raw.push_back(c.packed());
  }
  return UniPoly(f, std::move(raw));
}

UniPoly UniPoly::from_ints(const FieldDesc& f, const std::vector<int>& coeffs) {
  std::vector<uint32_t> raw;
  raw.reserve(coeffs.size());
  for (int c : coeffs) raw.push_back(f.from_int(c).packed());
  return UniPoly(f, std::move(raw));
}

UniPoly UniPoly::constant(const Felt& c) {
  return UniPoly(c.field(), {c.packed()});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Felt UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
  return field_->element(coeffs_[i]);
}

Felt UniPoly::lc() const {
  if (coeffs_.empty()) throw std::domain_error("lc of zero polynomial");
  return field_->element(coeffs_.back());
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<uint32_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t a = i < coeffs_.size() ? coeffs_[i] : 0;
    uint32_t b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
    r[i] = field_->add(a, b);
  }
  return UniPoly(*field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<uint32_t> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_->neg(coeffs_[i]);
  return UniPoly(*field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(*field_);
  std::vector<uint32_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] = field_->add(r[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
  }
  return UniPoly(*field_, std::move(r));
}

UniPoly UniPoly::operator*(const Felt& c) const {
  std::vector<uint32_t> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(coeffs_[i], c.packed());
  return UniPoly(*field_, std::move(r));
}

bool UniPoly::operator==(const UniPoly& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (degree() < d.degree()) return {UniPoly(*field_), *this};
  std::vector<uint32_t> rem = coeffs_;
  std::vector<uint32_t> quo(degree() - d.degree() + 1, 0);
  uint32_t lcinv = field_->inv(d.coeffs_.back());
  for (int i = degree(); i >= d.degree(); --i) {
    uint32_t c = rem[i];
    if (c == 0) continue;
    uint32_t q = field_->mul(c, lcinv);
    quo[i - d.degree()] = q;
    for (int j = 0; j <= d.degree(); ++j)
      rem[i - d.degree() + j] = field_->sub(
          rem[i - d.degree() + j], field_->mul(q, d.coeffs_[j]));
  }
  return {UniPoly(*field_, std::move(quo)), UniPoly(*field_, std::move(rem))};
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(*field_);
  std::vector<uint32_t> r(coeffs_.size() - 1, 0);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    uint32_t k = field_->from_int(static_cast<long long>(i)).packed();
    r[i - 1] = field_->mul(coeffs_[i], k);
  }
  return UniPoly(*field_, std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

Felt UniPoly::eval(const Felt& x) const {
  uint32_t acc = 0;
  for (int i = degree(); i >= 0; --i)
    acc = field_->add(field_->mul(acc, x.packed()), coeffs_[i]);
  return field_->element(acc);
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(*field_);
  for (int i = degree(); i >= 0; --i) {
    acc = acc * inner + UniPoly(*field_, {coeffs_[i]});
  }
  return acc;
}

UniPoly UniPoly::pow(int e) const {
  UniPoly r = from_ints(*field_, {1});
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::pow_mod(uint64_t e, const UniPoly& m) const {
  UniPoly r = from_ints(*field_, {1});
  UniPoly base = *this % m;
  while (e > 0) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::frobenius_power_mod(const UniPoly& m, int k) {
  UniPoly h = x(m.field());
  for (int i = 0; i < k; ++i) h = h.pow_mod(m.field().order(), m);
  return h;
}

UniPoly UniPoly::map_coeffs(const Embedding& emb) const {
  if (&emb.source() != field_)
    throw std::invalid_argument("embedding source mismatch");
  std::vector<uint32_t> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = emb.map_packed(coeffs_[i]);
  return UniPoly(emb.target(), std::move(r));
}

UniPoly UniPoly::reversed(int as_degree) const {
  if (as_degree < degree()) throw std::invalid_argument("degree too small");
  std::vector<uint32_t> r(as_degree + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) r[as_degree - i] = coeffs_[i];
  return UniPoly(*field_, std::move(r));
}

std::string UniPoly::str() const {
  if (is_zero()) return field_->to_string(0);
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += field_->to_string(coeffs_[i]);
  }
  return s;
}

UniPoly UniPoly::parse(const FieldDesc& f, std::string_view s) {
  std::vector<uint32_t> raw;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    raw.push_back(f.parse(tok).packed());
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return UniPoly(f, std::move(raw));
}

std::vector<uint32_t> UniPoly::sort_key() const {
  std::vector<uint32_t> key;
  key.push_back(static_cast<uint32_t>(degree() + 1));
  for (int i = degree(); i >= 0; --i) key.push_back(field_->enc_key(
      i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0));
  return key;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

Felt resultant(const UniPoly& f, const UniPoly& g) {
  const FieldDesc& k = f.field();
  if (f.is_zero() || g.is_zero()) return k.zero();
  if (g.degree() == 0) return g.lc().pow(f.degree());
  if (f.degree() == 0) return f.lc().pow(g.degree());
  UniPoly r = f % g;
  Felt sign = k.from_int((f.degree() * g.degree()) % 2 == 0 ? 1 : -1);
  if (r.is_zero()) return k.zero();
  Felt scale = g.lc().pow(f.degree() - r.degree());
  return sign * scale * resultant(g, r);
}

bool is_separable(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("separability of zero polynomial");
  UniPoly d = f.derivative();
  if (d.is_zero()) return f.degree() == 0;
  return gcd(f, d).degree() == 0;
}

Felt discriminant(const UniPoly& f) {
  int n = f.degree();
  if (n < 2) throw std::domain_error("discriminant needs degree >= 2");
  UniPoly fp = f.derivative();
  if (fp.is_zero()) return f.field().zero();
  // The resultant in the discriminant formula is taken at formal degree
  // n - 1 for f'; when the derivative drops degree (characteristic 3) this
  // contributes an extra power of the leading coefficient.
  Felt r = resultant(f, fp) * f.lc().pow(n - 1 - fp.degree());
  Felt sign = f.field().from_int((n * (n - 1) / 2) % 2 == 0 ? 1 : -1);
  return sign * r / f.lc();
}

std::map<int, int> factor_degree_counts(const UniPoly& f) {
  if (!is_separable(f)) throw std::domain_error("input must be separable");
  std::map<int, int> counts;
  UniPoly rem = f.monic();
  UniPoly h = UniPoly::x(f.field());
  int ell = 0;
  while (rem.degree() > 0) {
    ++ell;
    if (2 * ell > rem.degree()) {
      counts[rem.degree()] += 1;
      break;
    }
    h = h.pow_mod(f.field().order(), rem);
    UniPoly g = gcd(rem, h - UniPoly::x(f.field()));
    if (g.degree() > 0) {
      counts[ell] += g.degree() / ell;
      rem = rem / g;
      h = h % rem;
    }
  }
  return counts;
}

bool pellet_parity(const UniPoly& f) {
  auto counts = factor_degree_counts(f);
  int even = 0;
  for (auto [deg, n] : counts)
    if (deg % 2 == 0) even += n;
  return even % 2 == 0;
}

bool is_irreducible(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("irreducibility of zero");
  int n = f.degree();
  if (n <= 1) return n == 1;
  UniPoly h = UniPoly::x(f.field());
  for (int k = 1; k <= n / 2; ++k) {
    h = h.pow_mod(f.field().order(), f);
    if (gcd(f, h - UniPoly::x(f.field())).degree() > 0) return false;
  }
  return true;
}

std::vector<Felt> roots_in(const UniPoly& f, const Embedding& emb) {
  UniPoly fk = f.map_coeffs(emb);
  const FieldDesc& K = emb.target();
  std::vector<Felt> roots;
  for (uint32_t v = 0; v < K.order(); ++v) {
    Felt x = K.element(v);
    if (fk.eval(x).is_zero()) roots.push_back(x);
  }
  return roots;
}

std::vector<std::tuple<Felt, UniPoly, UniPoly>> cubic_factor_pairs(
    const UniPoly& f, const FieldDesc& k, const Embedding& emb) {
  if (f.degree() != 6) throw std::invalid_argument("need a sextic");
  if (!is_separable(f)) throw std::invalid_argument("need a separable sextic");
  if (&emb.source() != &f.field() || &emb.target() != &k)
    throw std::invalid_argument("embedding must map f's field into k");

  UniPoly fk = f.map_coeffs(emb);
  auto counts = factor_degree_counts(fk);
  int e = 1;
  for (auto [deg, n] : counts) e = std::lcm(e, deg);
  int split_degree = k.degree() * e;
  if (split_degree > kMaxDegree)
    throw std::domain_error("splitting field beyond supported degree cap");
  const Embedding& up = Embedding::get(k.degree(), split_degree);
  std::vector<Felt> roots = roots_in(fk, up);
  if (roots.size() != 6) throw std::logic_error("sextic did not split");
  std::sort(roots.begin(), roots.end(),
            [](const Felt& a, const Felt& b) { return a.enc_key() < b.enc_key(); });

  const FieldDesc& S = up.target();
  Felt lc_k = fk.lc();

  auto cubic_from = [&](const std::vector<int>& idx) {
    UniPoly g = UniPoly::from_ints(S, {1});
    for (int i : idx) {
      g = g * UniPoly::from_felts({-roots[i], S.one()});
    }
    return g;
  };
  auto pull_back = [&](const UniPoly& g) -> std::optional<UniPoly> {
    std::vector<uint32_t> raw;
    for (int i = 0; i <= g.degree(); ++i) {
      auto pre = up.preimage(g.coeff(i));
      if (!pre) return std::nullopt;
      raw.push_back(pre->packed());
    }
    return UniPoly(k, std::move(raw));
  };

  std::vector<std::tuple<Felt, UniPoly, UniPoly>> out;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        std::vector<int> in = {a, b, c}, rest;
        for (int i = 0; i < 6; ++i)
          if (i != a && i != b && i != c) rest.push_back(i);
        auto g1 = pull_back(cubic_from(in));
        if (!g1) continue;
        auto g2 = pull_back(cubic_from(rest));
        if (!g2) continue;
        out.emplace_back(lc_k, *g1, *g2);
      }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    auto kx = std::get<1>(x).sort_key();
    auto ky = std::get<1>(y).sort_key();
    if (kx != ky) return kx < ky;
    return std::get<2>(x).sort_key() < std::get<2>(y).sort_key();
  });
  return out;
}

}  // namespace ss3

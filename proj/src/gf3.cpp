#include "ss3/gf3.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ss3 {

const std::array<uint32_t, kMaxDegree + 1> kPow3 = {
    1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683, 59049, 177147, 531441};

namespace {

constexpr uint32_t kHalf = 729;  // 3^6, split point for packed digit ops

// Digit-wise mod-3 addition / negation of packed 6-digit values, shared by
// every field.
struct DigitTables {
  std::vector<uint16_t> add;  // kHalf * kHalf
  std::array<uint16_t, kHalf> neg;

  DigitTables() : add(kHalf * kHalf) {
    for (uint32_t a = 0; a < kHalf; ++a) {
      uint32_t n = 0;
      for (int k = 0, p = 1; k < 6; ++k, p *= 3) {
        int da = (a / p) % 3;
        n += static_cast<uint32_t>((3 - da) % 3) * p;
      }
      neg[a] = static_cast<uint16_t>(n);
      for (uint32_t b = 0; b <= a; ++b) {
        uint32_t s = 0;
        for (int k = 0, p = 1; k < 6; ++k, p *= 3) {
          int da = (a / p) % 3, db = (b / p) % 3;
          s += static_cast<uint32_t>((da + db) % 3) * p;
        }
        add[a * kHalf + b] = static_cast<uint16_t>(s);
        add[b * kHalf + a] = static_cast<uint16_t>(s);
      }
    }
  }
};

const DigitTables& digit_tables() {
  static const DigitTables t;
  return t;
}

// --- plain F_3[x] arithmetic on digit vectors, used only during field
// construction (modulus search, bootstrap multiplication) ---

using Pol3 = std::vector<uint8_t>;  // constant-first, may have high zeros

int pdeg(const Pol3& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i]) return i;
  return -1;
}

Pol3 pmul(const Pol3& a, const Pol3& b) {
  int da = pdeg(a), db = pdeg(b);
  if (da < 0 || db < 0) return {};
  Pol3 r(da + db + 1, 0);
  for (int i = 0; i <= da; ++i)
    for (int j = 0; j <= db; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
  return r;
}

// Remainder of a modulo monic m.
Pol3 pmod(Pol3 a, const Pol3& m) {
  int dm = pdeg(m);
  for (int i = pdeg(a); i >= dm; --i) {
    uint8_t c = a[i];
    if (!c) continue;
    for (int j = 0; j <= dm; ++j)
      a[i - dm + j] = (a[i - dm + j] + 3 - c * m[j] % 3) % 3;
  }
  a.resize(std::max(dm, 1));
  return a;
}

Pol3 pgcd(Pol3 a, Pol3 b) {
  while (pdeg(b) >= 0) {
    // reduce a mod b (b need not be monic; scale)
    int db = pdeg(b);
    uint8_t lc = b[db];
    uint8_t lcinv = (lc == 1) ? 1 : 2;  // inverses mod 3
    Pol3 bm = b;
    for (auto& c : bm) c = c * lcinv % 3;
    a = pmod(std::move(a), bm);
    std::swap(a, b);
  }
  return a;
}

Pol3 ppowmod(Pol3 base, uint64_t e, const Pol3& m) {
  Pol3 r = {1};
  base = pmod(std::move(base), m);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base), m);
    base = pmod(pmul(base, base), m);
    e >>= 1;
  }
  return r;
}

bool is_irreducible_f3(const Pol3& m) {
  int d = pdeg(m);
  if (d < 1) return false;
  // x^(3^d) = x mod m, and gcd(x^(3^k) - x, m) = 1 for k <= d/2.
  Pol3 x = {0, 1};
  Pol3 h = x;
  for (int k = 1; k <= d; ++k) {
    h = ppowmod(std::move(h), 3, m);
    if (k <= d / 2) {
      Pol3 diff = h;
      diff.resize(std::max<size_t>(diff.size(), 2), 0);
      diff[1] = (diff[1] + 3 - 1) % 3;
      Pol3 g = pgcd(diff, m);
      if (pdeg(g) != 0) return false;
    }
  }
  Pol3 diff = h;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + 3 - 1) % 3;
  return pdeg(diff) < 0;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

// --- FieldDesc ---

FieldDesc::FieldDesc(int degree) : d_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("field degree out of supported range [1,12]");
  q_ = kPow3[degree];

  // Lexicographically smallest monic irreducible of degree d, coefficients
  // compared constant-first.  For d = 1 this scan yields x itself.
  modulus_.assign(d_ + 1, 0);
  modulus_[d_] = 1;
  if (d_ == 1) {
    // x is irreducible; nothing to search.
  } else {
    bool found = false;
    std::vector<uint8_t> digits(d_, 0);
    for (uint64_t key = 0; key < q_ && !found; ++key) {
      uint64_t k = key;
      for (int i = d_ - 1; i >= 0; --i) {  // constant digit most significant
        digits[i] = static_cast<uint8_t>(k % 3);
        k /= 3;
      }
      Pol3 cand(d_ + 1, 0);
      for (int i = 0; i < d_; ++i) cand[i] = digits[i];
      cand[d_] = 1;
      if (is_irreducible_f3(cand)) {
        for (int i = 0; i < d_; ++i) modulus_[i] = digits[i];
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  // Find a multiplicative generator using bootstrap multiplication, then fill
  // the discrete-log tables that back all fast arithmetic.
  auto pow_slow = [&](uint32_t a, uint64_t e) {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  const auto primes = prime_factors(q_ - 1);
  generator_ = 0;
  for (uint32_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (uint64_t p : primes)
      if (pow_slow(cand, (q_ - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = cand;
      break;
    }
  }
  if (generator_ == 0 && q_ == 3) generator_ = 2;
  if (generator_ == 0) throw std::logic_error("no generator found");

  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  uint32_t acc = 1;
  for (uint64_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = acc;
    exp_[k + (q_ - 1)] = acc;
    log_[acc] = static_cast<uint32_t>(k);
    acc = mul_slow(acc, generator_);
  }
  if (acc != 1) throw std::logic_error("generator order mismatch");
}

uint32_t FieldDesc::mul_slow(uint32_t a, uint32_t b) const {
  // Schoolbook product of digit vectors followed by reduction by the modulus.
  std::array<uint8_t, 2 * kMaxDegree> prod{};
  std::array<uint8_t, kMaxDegree> da{}, db{};
  for (int i = 0; i < d_; ++i) {
    da[i] = a % 3;
    a /= 3;
    db[i] = b % 3;
    b /= 3;
  }
  for (int i = 0; i < d_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < d_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % 3;
  }
  for (int i = 2 * d_ - 2; i >= d_; --i) {
    uint8_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (int j = 0; j < d_; ++j)
      prod[i - d_ + j] = (prod[i - d_ + j] + 3 - c * modulus_[j] % 3) % 3;
  }
  uint32_t r = 0;
  for (int i = d_ - 1; i >= 0; --i) r = r * 3 + prod[i];
  return r;
}

const FieldDesc& FieldDesc::get(int degree) {
  static std::mutex mu;
  static std::array<std::unique_ptr<FieldDesc>, kMaxDegree + 1> cache;
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("field degree out of supported range [1,12]");
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[degree]) cache[degree].reset(new FieldDesc(degree));
  return *cache[degree];
}

uint32_t FieldDesc::add(uint32_t a, uint32_t b) const {
  const auto& t = digit_tables();
  if (d_ <= 6) return t.add[a * kHalf + b];
  uint32_t lo = t.add[(a % kHalf) * kHalf + (b % kHalf)];
  uint32_t hi = t.add[(a / kHalf) * kHalf + (b / kHalf)];
  return lo + hi * kHalf;
}

uint32_t FieldDesc::neg(uint32_t a) const {
  const auto& t = digit_tables();
  if (d_ <= 6) return t.neg[a];
  return t.neg[a % kHalf] + static_cast<uint32_t>(t.neg[a / kHalf]) * kHalf;
}

uint32_t FieldDesc::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldDesc::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

uint32_t FieldDesc::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  uint32_t l = log_[a];
  return exp_[(q_ - 1 - l) % (q_ - 1)];
}

uint32_t FieldDesc::pow(uint32_t a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("zero to a negative power");
  }
  long long m = static_cast<long long>(q_ - 1);
  long long l = (static_cast<long long>(log_[a]) % m * (e % m)) % m;
  if (l < 0) l += m;
  return exp_[l];
}

uint32_t FieldDesc::frobenius(uint32_t a, int k) const {
  if (a == 0) return 0;
  k %= d_;
  if (k < 0) k += d_;
  uint64_t m = q_ - 1;
  uint64_t l = (static_cast<uint64_t>(log_[a]) * (kPow3[k] % m)) % m;
  return exp_[l];
}

int FieldDesc::chi2(uint32_t a) const {
  if (a == 0) throw std::domain_error("chi2 of zero");
  return (log_[a] % 2 == 0) ? 1 : -1;
}

uint32_t FieldDesc::dlog(uint32_t a) const {
  if (a == 0) throw std::domain_error("dlog of zero");
  return log_[a];
}

uint32_t FieldDesc::from_dlog(uint64_t k) const { return exp_[k % (q_ - 1)]; }

Felt FieldDesc::from_int(long long n) const {
  long long r = n % 3;
  if (r < 0) r += 3;
  return element(static_cast<uint32_t>(r));
}

uint32_t FieldDesc::enc_key(uint32_t v) const {
  uint32_t key = 0;
  for (int k = 0; k < d_; ++k) {
    key = key * 3 + v % 3;  // constant digit becomes most significant
    v /= 3;
  }
  return key;
}

uint32_t FieldDesc::from_enc_key(uint32_t key) const {
  uint32_t v = 0;
  for (int k = 0; k < d_; ++k) {
    v = v * 3 + key % 3;
    key /= 3;
  }
  return v;
}

std::string FieldDesc::to_string(uint32_t v) const {
  std::string s(d_, '0');
  for (int k = 0; k < d_; ++k) {
    s[k] = static_cast<char>('0' + v % 3);
    v /= 3;
  }
  return s;
}

Felt FieldDesc::parse(std::string_view s) const {
  if (static_cast<int>(s.size()) != d_)
    throw std::invalid_argument("felt string must have exactly d digits");
  uint32_t v = 0;
  for (int k = d_ - 1; k >= 0; --k) {
    char c = s[k];
    if (c < '0' || c > '2')
      throw std::invalid_argument("felt digits must be in {0,1,2}");
    v = v * 3 + (c - '0');
  }
  return element(v);
}

// --- Felt ---

namespace {
void check_same_field(const Felt& a, const Felt& b) {
  if (&a.field() != &b.field())
    throw std::invalid_argument("mixed-field operands");
}
}  // namespace

int Felt::digit(int k) const { return (v_ / kPow3[k]) % 3; }

uint32_t Felt::enc_key() const { return field_->enc_key(v_); }

std::string Felt::str() const { return field_->to_string(v_); }

Felt Felt::operator-() const { return Felt(*field_, field_->neg(v_)); }

Felt Felt::operator+(const Felt& o) const {
  check_same_field(*this, o);
  return Felt(*field_, field_->add(v_, o.v_));
}

Felt Felt::operator-(const Felt& o) const {
  check_same_field(*this, o);
  return Felt(*field_, field_->sub(v_, o.v_));
}

Felt Felt::operator*(const Felt& o) const {
  check_same_field(*this, o);
  return Felt(*field_, field_->mul(v_, o.v_));
}

Felt Felt::operator/(const Felt& o) const {
  check_same_field(*this, o);
  return Felt(*field_, field_->mul(v_, field_->inv(o.v_)));
}

bool Felt::operator==(const Felt& o) const {
  check_same_field(*this, o);
  return v_ == o.v_;
}

Felt Felt::inv() const { return Felt(*field_, field_->inv(v_)); }

Felt Felt::pow(long long e) const { return Felt(*field_, field_->pow(v_, e)); }

Felt Felt::frobenius(int k) const {
  return Felt(*field_, field_->frobenius(v_, k));
}

// --- Embedding ---

Embedding::Embedding(const FieldDesc& src, const FieldDesc& dst)
    : src_(&src), dst_(&dst) {
  if (dst.degree() % src.degree() != 0)
    throw std::invalid_argument("source degree must divide target degree");

  if (&src == &dst) {
    // The identity map; skip the root search so conjugates are not picked.
    gen_image_ = src.degree() > 1 ? 3 : src.modulus()[0] == 0
                                            ? 0
                                            : (3 - src.modulus()[0]) % 3;
    table_.resize(src.order());
    for (uint32_t v = 0; v < src.order(); ++v) table_[v] = v;
    return;
  }

  // Root of the source modulus in the target, smallest encoding key first.
  const auto& m = src.modulus();
  gen_image_ = 0;
  bool found = false;
  uint32_t best_key = 0;
  for (uint32_t v = 0; v < dst.order(); ++v) {
    uint32_t acc = 0;
    for (int i = src.degree(); i >= 0; --i)
      acc = dst.add(dst.mul(acc, v), m[i]);
    if (acc == 0) {
      uint32_t key = dst.enc_key(v);
      if (!found || key < best_key) {
        found = true;
        best_key = key;
        gen_image_ = v;
      }
    }
  }
  if (!found) throw std::logic_error("source modulus has no root in target");

  table_.resize(src.order());
  for (uint32_t v = 0; v < src.order(); ++v) {
    uint32_t acc = 0;
    uint32_t x = v;
    // Horner on the digits, highest power first.
    for (int k = src.degree() - 1; k >= 0; --k) {
      uint32_t dk = (x / kPow3[k]) % 3;
      acc = dst.add(dst.mul(acc, gen_image_), dk);
    }
    table_[v] = acc;
  }
}

const Embedding& Embedding::get(const FieldDesc& src, const FieldDesc& dst) {
  return get(src.degree(), dst.degree());
}

const Embedding& Embedding::get(int src_degree, int dst_degree) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<Embedding>> cache;
  std::lock_guard<std::mutex> lock(mu);
  int key = src_degree * 64 + dst_degree;
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto emb = std::unique_ptr<Embedding>(new Embedding(
        FieldDesc::get(src_degree), FieldDesc::get(dst_degree)));
    it = cache.emplace(key, std::move(emb)).first;
  }
  return *it->second;
}

Felt Embedding::map(const Felt& x) const {
  if (&x.field() != src_)
    throw std::invalid_argument("element not in embedding source");
  return dst_->element(table_[x.packed()]);
}

std::optional<Felt> Embedding::preimage(const Felt& y) const {
  if (&y.field() != dst_)
    throw std::invalid_argument("element not in embedding target");
  // Fields are tiny; a linear scan keeps the type stateless beyond its table.
  for (uint32_t v = 0; v < src_->order(); ++v)
    if (table_[v] == y.packed()) return src_->element(v);
  return std::nullopt;
}

// --- free functions ---

int abs_trace(const Felt& x) {
  const FieldDesc& f = x.field();
  uint32_t acc = 0;
  for (int k = 0; k < f.degree(); ++k)
    acc = f.add(acc, f.frobenius(x.packed(), k));
  if (acc > 2) throw std::logic_error("trace not in prime field");
  return static_cast<int>(acc);
}

Felt rel_trace(const Felt& x, const Embedding& emb) {
  if (&x.field() != &emb.target())
    throw std::invalid_argument("element not in embedding target");
  int ds = emb.source().degree();
  int n = emb.target().degree() / ds;
  const FieldDesc& f = x.field();
  uint32_t acc = 0;
  for (int k = 0; k < n; ++k)
    acc = f.add(acc, f.frobenius(x.packed(), ds * k));
  auto pre = emb.preimage(f.element(acc));
  if (!pre) throw std::logic_error("relative trace not in subfield");
  return *pre;
}

int chi2(const Felt& x) { return x.field().chi2(x.packed()); }

Felt chi4(const Felt& x) {
  const FieldDesc& f = x.field();
  if (f.degree() % 2 != 0)
    throw std::domain_error("chi4 requires an even-degree field");
  if (x.is_zero()) throw std::domain_error("chi4 of zero");
  return x.pow(static_cast<long long>((f.order() - 1) / 4));
}

std::optional<Felt> square_root(const Felt& x) {
  const FieldDesc& f = x.field();
  if (x.is_zero()) return f.zero();
  if (f.chi2(x.packed()) < 0) return std::nullopt;
  uint32_t l = f.dlog(x.packed());  // even
  Felt r1 = f.element(f.from_dlog(l / 2));
  Felt r2 = -r1;
  return (r1.enc_key() <= r2.enc_key()) ? r1 : r2;
}

Felt s_of_b(const Felt& b) {
  const FieldDesc& f = b.field();
  if (f.degree() % 2 == 0)
    throw std::domain_error("s(b) requires an odd-degree field");
  if (b.is_zero()) throw std::domain_error("s(b) of zero");
  long long e = (3 - static_cast<long long>(f.order())) / 4;
  return b.pow(e);
}

Felt unit_i(const FieldDesc& f) {
  if (f.degree() % 2 != 0)
    throw std::domain_error("no square root of -1 in odd-degree fields");
  const FieldDesc& f9 = FieldDesc::get(2);
  Felt i9 = *square_root(-f9.one());
  if (f.degree() == 2) return i9;
  return Embedding::get(2, f.degree()).map(i9);
}

Felt smallest_nonsquare(const FieldDesc& f) {
  for (uint32_t key = 0; key < f.order(); ++key) {
    uint32_t v = f.from_enc_key(key);
    if (v != 0 && f.chi2(v) < 0) return f.element(v);
  }
  throw std::logic_error("no nonsquare found");
}

bool in_subfield(const Felt& x, int sub_degree) {
  return x.field().frobenius(x.packed(), sub_degree) == x.packed();
}

}  // namespace ss3

#pragma once

#include <map>
#include <string_view>
#include <tuple>
#include <vector>

#include "ss3/gf3.hpp"

namespace ss3 {

/// Dense univariate polynomial over a GF(3^d), coefficients constant-first
/// with no trailing zeros (the zero polynomial has an empty vector).
class UniPoly {
 public:
  explicit UniPoly(const FieldDesc& f) : field_(&f) {}
  UniPoly(const FieldDesc& f, std::vector<uint32_t> coeffs);
  static UniPoly from_felts(const std::vector<Felt>& coeffs);
  /// Coefficients given as integers, reduced mod 3; convenient for literals.
  static UniPoly from_ints(const FieldDesc& f, const std::vector<int>& coeffs);
  static UniPoly x(const FieldDesc& f) { return from_ints(f, {0, 1}); }
  static UniPoly constant(const Felt& c);

  const FieldDesc& field() const { return *field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Felt coeff(int i) const;
  Felt lc() const;
  const std::vector<uint32_t>& raw() const { return coeffs_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Felt& c) const;
  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

  UniPoly derivative() const;
  UniPoly monic() const;
  Felt eval(const Felt& x) const;
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(int e) const;
  /// this^e mod m, with a plain 64-bit exponent.
  UniPoly pow_mod(uint64_t e, const UniPoly& m) const;
  /// x^(q^k) mod m for q the coefficient field order.
  static UniPoly frobenius_power_mod(const UniPoly& m, int k);

  UniPoly map_coeffs(const Embedding& emb) const;
  /// z^deg(this) * this(1/z): coefficient reversal, used for point-at-infinity
  /// changes of variable.
  UniPoly reversed(int as_degree) const;

  std::string str() const;
  static UniPoly parse(const FieldDesc& f, std::string_view s);

  /// Comparison key for deterministic orderings: degree, then coefficient
  /// encoding keys from the top.
  std::vector<uint32_t> sort_key() const;

 private:
  void trim();
  const FieldDesc* field_;
  std::vector<uint32_t> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic
Felt resultant(const UniPoly& f, const UniPoly& g);

bool is_separable(const UniPoly& f);

/// Discriminant with the convention
/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f), n = deg f.
Felt discriminant(const UniPoly& f);

/// Number of irreducible factors of each degree (separable input).
std::map<int, int> factor_degree_counts(const UniPoly& f);

/// True iff f has an even number of irreducible factors of even degree.
bool pellet_parity(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

/// Distinct roots of f in the target of emb.
std::vector<Felt> roots_in(const UniPoly& f, const Embedding& emb);

/// All ordered factorizations lc * g1 * g2 of a separable sextic f into monic
/// cubics over k, where emb maps f's field into k.  Deterministically ordered.
std::vector<std::tuple<Felt, UniPoly, UniPoly>> cubic_factor_pairs(
    const UniPoly& f, const FieldDesc& k, const Embedding& emb);

}  // namespace ss3

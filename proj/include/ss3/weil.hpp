#pragma once

#include <cstdint>
#include <string>
#include <set>
#include <vector>

namespace ss3 {

/// x^2 - t*x + q, the characteristic polynomial of Frobenius of an elliptic
/// curve over F_q (or of a factor of a split quartic).
struct WeilQuadratic {
  long long t;
  long long q;

  WeilQuadratic(long long t_, long long q_);
  bool operator==(const WeilQuadratic& o) const = default;
};

/// x^4 - s1*x^3 + s2*x^2 - q*s1*x + q^2: the characteristic polynomial of
/// Frobenius of an abelian surface over F_q, stored as exact integers.
struct WeilQuartic {
  long long s1;
  long long s2;
  long long q;

  WeilQuartic(long long s1_, long long s2_, long long q_);

  bool operator==(const WeilQuartic& o) const = default;
  bool operator<(const WeilQuartic& o) const {
    if (s1 != o.s1) return s1 < o.s1;
    if (s2 != o.s2) return s2 < o.s2;
    return q < o.q;
  }

  /// Coefficients of the monic quartic, constant term first.
  std::vector<long long> coefficients() const;
  std::string str() const;
};

/// True iff n = 3^k for some k >= 0; then *d_out = k when d_out != nullptr.
bool is_power_of_3(long long n, int* d_out = nullptr);

/// s1 = q + 1 - N1 and s2 = (s1^2 + N2 - q^2 - 1) / 2; the division must be
/// exact, otherwise the counts are inconsistent and we throw.
WeilQuartic weil_from_counts(long long N1, long long N2, long long q);

/// The complete list of Weil polynomials of supersingular genus-2 curves
/// over F_q (q = 3^d), as a set of (s1, s2) pairs wrapped in WeilQuartic.
std::set<WeilQuartic> theorem1_list(long long q);

/// The complete list of Weil polynomials of supersingular abelian surfaces
/// over F_q; a strict superset of theorem1_list(q).
std::set<WeilQuartic> lemma_ssas_list(long long q);

/// Membership in lemma_ssas_list for W's own q.
bool is_supersingular_weil(const WeilQuartic& W);

/// Weil quartic over F_q of the restriction of scalars from F_{q^2} of an
/// elliptic curve with quadratic x^2 - t*x + q^2: the quartic x^4 - t*x^2 + q^2.
WeilQuartic res_scalars_weil(const WeilQuadratic& W);

}  // namespace ss3

#pragma once

#include <array>
#include <map>

#include "ss3/unipoly.hpp"

namespace ss3 {

/// A reduced fraction of polynomials over GF(3^e).
struct RationalFn {
  UniPoly num, den;
  int degree() const { return std::max(num.degree(), den.degree()); }
};

/// The PSL2(F_r)-invariant function
/// F = (z^(r^2) - z)^((r+1)/2) / (z^r - z)^((r^2+1)/2), reduced; its degree
/// equals #PSL2(F_r) (12 for r = 3, 360 for r = 9).  r in {3, 9}.
RationalFn build_F(int r);

/// F is fixed by z -> z + a (all a in F_r) and by z -> -1/z, verified as
/// exact cross-multiplied polynomial identities.
bool check_invariance(int r);

/// A single substitution check used by check_invariance, exposed so tests
/// can run negative controls: sigma given as z -> (num_sub / den_sub).
bool invariant_under(const RationalFn& F, const UniPoly& num_sub,
                     const UniPoly& den_sub);

/// Separability of ((z^r - z)^(r-1) + 1)^((r+1)/2) - e (z^r - z)^(r(r-1)/2).
bool check_separability(int r, const Felt& e);

/// For every c in F_{q^2} \ F_q whose associated value
/// (c^(r-1) + 1)^((r+1)/2) / c^(r(r-1)/2) lies in F_q, the relative trace of
/// c to F_r vanishes.  (r, q) in {(3,9), (3,27), (9,81)}.
bool verify_trace_zero_criterion(int r, long long q);

/// For every nonzero c in F_Q with relative trace 0 to F_r, the polynomial
/// (z^(r-1) + 1)^((r+1)/2) - e z^(r(r-1)/2), with e the value associated to
/// c, splits completely over F_Q.
bool verify_complete_splitting(int r, long long Q);

/// Helper for the splitting lemma: whether the polynomial attached to c
/// splits completely over c's field.
bool splits_completely_for(const Felt& c, int r);

struct SignDescentReport {
  bool ok;
  int qualifying;  // number of c examined
  int plus_sign;   // witnesses found with + sign
  int minus_sign;  // witnesses found with - sign (curve side uses b = i)
};

/// For every c in F_{q^2} \ F_q with (c^8+1)^5/c^36 in F_q and nonzero
/// relative trace to F_9, some cbar in F_q^* satisfies
/// (cbar^8+1)^5/cbar^36 = +-(c^8+1)^5/c^36.  q odd power of 3, here 3 or 27.
SignDescentReport verify_sign_descent(long long q);

/// Map from element order to count over PSL2(F_r); contains no order 6.
std::map<int, int> psl2_order_census(int r);

/// The two upper-triangular normal forms sigma = conj(rho) * rho of order 3:
/// rho in {[[1, 1+i], [0, 1]], [[-1+i, 1+i], [0, 1+i]]} over F_9, where
/// conj is the entrywise Frobenius.  Returns true iff both have order 3.
bool verify_rho_normal_forms();

}  // namespace ss3

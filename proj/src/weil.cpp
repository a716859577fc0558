#include "ss3/weil.hpp"

#include <stdexcept>
#include <string>

namespace ss3 {

bool is_power_of_3(long long n, int* d_out) {
  if (n < 1) return false;
  int d = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++d;
  }
  if (n != 1) return false;
  if (d_out) *d_out = d;
  return true;
}

namespace {

// Exact integer square root of a perfect square.
long long exact_sqrt(long long n) {
  long long r = 0;
  while (r * r < n) ++r;
  if (r * r != n) throw std::logic_error("not a perfect square");
  return r;
}

int degree_of(long long q) {
  int d;
  if (!is_power_of_3(q, &d)) throw std::invalid_argument("q must be a power of 3");
  return d;
}

}  // namespace

WeilQuadratic::WeilQuadratic(long long t_, long long q_) : t(t_), q(q_) {
  if (!is_power_of_3(q)) throw std::invalid_argument("q must be a power of 3");
  if (t * t > 4 * q) throw std::invalid_argument("trace violates the Weil bound");
}

WeilQuartic::WeilQuartic(long long s1_, long long s2_, long long q_)
    : s1(s1_), s2(s2_), q(q_) {
  if (!is_power_of_3(q)) throw std::invalid_argument("q must be a power of 3");
  if (s1 * s1 > 16 * q || s2 > 6 * q || s2 < -6 * q)
    throw std::invalid_argument("coefficients violate the Weil bounds");
}

std::vector<long long> WeilQuartic::coefficients() const {
  return {q * q, -q * s1, s2, -s1, 1};
}

std::string WeilQuartic::str() const {
  return "x^4 - (" + std::to_string(s1) + ")x^3 + (" + std::to_string(s2) +
         ")x^2 - (" + std::to_string(q * s1) + ")x + " + std::to_string(q * q);
}

WeilQuartic weil_from_counts(long long N1, long long N2, long long q) {
  long long s1 = q + 1 - N1;
  long long num = s1 * s1 + N2 - q * q - 1;
  if (num % 2 != 0) throw std::invalid_argument("inconsistent point counts");
  return WeilQuartic(s1, num / 2, q);
}

std::set<WeilQuartic> theorem1_list(long long q) {
  int d = degree_of(q);
  std::set<WeilQuartic> out;
  if (d % 2 == 1) {
    long long r = exact_sqrt(3 * q);
    // (x^2 + q)(x^2 - sx + q), s = +-sqrt(3q)
    out.emplace(r, 2 * q, q);
    out.emplace(-r, 2 * q, q);
    if (q > 3) out.emplace(0, 2 * q, q);  // (x^2 + q)^2
    out.emplace(0, 0, q);                 // x^4 + q^2
    out.emplace(0, q, q);                 // x^4 + qx^2 + q^2
    if (q > 3) out.emplace(0, -2 * q, q);  // x^4 - 2qx^2 + q^2
  } else {
    long long r = exact_sqrt(q);
    // (x^2 - 2sx + q)(x^2 + sx + q), s = +-sqrt(q): (s1, s2) = (s, 0)
    out.emplace(r, 0, q);
    out.emplace(-r, 0, q);
    // (x^2 - sx + q)^2, s in {0, +-sqrt(q)}
    out.emplace(0, 2 * q, q);
    out.emplace(2 * r, 3 * q, q);
    out.emplace(-2 * r, 3 * q, q);
    if (q > 9) {  // (x^2 - 2sx + q)^2
      out.emplace(4 * r, 6 * q, q);
      out.emplace(-4 * r, 6 * q, q);
    }
    out.emplace(0, 0, q);  // x^4 + q^2
    out.emplace(r, q, q);  // x^4 - sx^3 + qx^2 - sqx + q^2
    out.emplace(-r, q, q);
  }
  return out;
}

std::set<WeilQuartic> lemma_ssas_list(long long q) {
  int d = degree_of(q);
  std::set<WeilQuartic> out;
  std::vector<long long> traces;
  if (d % 2 == 1) {
    long long r = exact_sqrt(3 * q);
    traces = {0, r, -r};
  } else {
    long long r = exact_sqrt(q);
    traces = {0, r, -r, 2 * r, -2 * r};
  }
  for (long long s : traces)
    for (long long t : traces) out.emplace(s + t, s * t + 2 * q, q);
  out.emplace(0, 0, q);  // x^4 + q^2
  if (d % 2 == 1) {
    out.emplace(0, q, q);       // x^4 + qx^2 + q^2
    out.emplace(0, -2 * q, q);  // x^4 - 2qx^2 + q^2
  } else {
    long long r = exact_sqrt(q);
    out.emplace(0, -q, q);  // x^4 - qx^2 + q^2
    out.emplace(r, q, q);   // x^4 - sx^3 + qx^2 - sqx + q^2
    out.emplace(-r, q, q);
  }
  return out;
}

bool is_supersingular_weil(const WeilQuartic& W) {
  return lemma_ssas_list(W.q).count(W) > 0;
}

WeilQuartic res_scalars_weil(const WeilQuadratic& W) {
  long long q = exact_sqrt(W.q);
  if (!is_power_of_3(q))
    throw std::invalid_argument("input must live over a square field q^2");
  return WeilQuartic(0, -W.t, q);
}

}  // namespace ss3

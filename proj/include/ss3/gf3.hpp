#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ss3 {

/// Largest supported extension degree over F_3.  GF(3^12) is the quadratic
/// extension of GF(3^6) and is the biggest field any computation here needs.
inline constexpr int kMaxDegree = 12;

extern const std::array<uint32_t, kMaxDegree + 1> kPow3;

class FieldDesc;
class Embedding;

/// An element of GF(3^d), stored as the base-3 packing of its power-basis
/// coordinates (constant coefficient in the lowest digit).  Thin value type;
/// all arithmetic is delegated to the owning FieldDesc.
class Felt {
 public:
  Felt() = default;
  Felt(const FieldDesc& f, uint32_t packed) : field_(&f), v_(packed) {}

  const FieldDesc& field() const { return *field_; }
  uint32_t packed() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  int digit(int k) const;

  /// Digits read constant-coefficient-first as a base-3 integer; the total
  /// order used for every deterministic tie-break in the library.
  uint32_t enc_key() const;

  std::string str() const;

  Felt operator-() const;
  Felt operator+(const Felt& o) const;
  Felt operator-(const Felt& o) const;
  Felt operator*(const Felt& o) const;
  Felt operator/(const Felt& o) const;
  bool operator==(const Felt& o) const;
  bool operator!=(const Felt& o) const { return !(*this == o); }

  Felt inv() const;
  Felt pow(long long e) const;
  Felt frobenius(int k = 1) const;  // x -> x^(3^k)
  Felt square() const { return *this * *this; }

 private:
  const FieldDesc* field_ = nullptr;
  uint32_t v_ = 0;
};

/// A concrete model of GF(3^d): the quotient of F_3[x] by the
/// lexicographically smallest monic irreducible polynomial of degree d.
/// Instances are canonical per degree, immutable, and cached for the life of
/// the process, so pointer equality decides field equality.
class FieldDesc {
 public:
  static const FieldDesc& get(int degree);

  int degree() const { return d_; }
  uint64_t order() const { return q_; }
  /// Modulus coefficients, constant-first, length degree+1, monic.
  const std::vector<uint8_t>& modulus() const { return modulus_; }

  // Arithmetic on packed representations.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, long long e) const;
  uint32_t frobenius(uint32_t a, int k) const;
  /// Quadratic character as +1/-1; throws on zero.
  int chi2(uint32_t a) const;
  uint32_t dlog(uint32_t a) const;         // a != 0
  uint32_t from_dlog(uint64_t k) const;    // g^k

  Felt element(uint32_t packed) const { return Felt(*this, packed); }
  Felt zero() const { return element(0); }
  Felt one() const { return element(1); }
  Felt from_int(long long n) const;
  Felt gen() const { return element(generator_); }

  uint32_t enc_key(uint32_t v) const;
  uint32_t from_enc_key(uint32_t key) const;

  std::string to_string(uint32_t v) const;
  /// Parses exactly degree() characters from {0,1,2}, constant digit first.
  Felt parse(std::string_view s) const;

  FieldDesc(const FieldDesc&) = delete;
  FieldDesc& operator=(const FieldDesc&) = delete;

 private:
  explicit FieldDesc(int degree);

  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  int d_;
  uint64_t q_;
  std::vector<uint8_t> modulus_;
  uint32_t generator_;
  std::vector<uint32_t> exp_;  // length 2(q-1): g^k without modular reduction
  std::vector<uint32_t> log_;  // length q; log_[0] unused
};

/// The canonical embedding GF(3^s) -> GF(3^t) for s | t: the source generator
/// is sent to the root of the source modulus in the target with the smallest
/// encoding key.  Cached and immutable, like FieldDesc.
class Embedding {
 public:
  static const Embedding& get(const FieldDesc& src, const FieldDesc& dst);
  static const Embedding& get(int src_degree, int dst_degree);

  const FieldDesc& source() const { return *src_; }
  const FieldDesc& target() const { return *dst_; }
  Felt gen_image() const { return dst_->element(gen_image_); }

  Felt map(const Felt& x) const;
  uint32_t map_packed(uint32_t v) const { return table_[v]; }
  /// Inverse lookup; empty when the target element is outside the image.
  std::optional<Felt> preimage(const Felt& y) const;

  Embedding(const Embedding&) = delete;
  Embedding& operator=(const Embedding&) = delete;

 private:
  Embedding(const FieldDesc& src, const FieldDesc& dst);

  const FieldDesc* src_;
  const FieldDesc* dst_;
  uint32_t gen_image_;
  std::vector<uint32_t> table_;  // indexed by source packed value
};

/// Absolute trace to F_3, returned as a digit in {0,1,2}.
int abs_trace(const Felt& x);

/// Relative trace of x down to emb.source(), where emb maps the subfield into
/// x's field.  Satisfies Tr_abs = Tr_abs o rel_trace.
Felt rel_trace(const Felt& x, const Embedding& emb);

/// Quadratic character, +1 on squares, -1 on nonsquares; throws on zero.
int chi2(const Felt& x);

/// Quartic character x^((q-1)/4), valued in {1, -1, i, -i}; requires even
/// degree and x != 0.
Felt chi4(const Felt& x);

/// Square root with the deterministic tie-break: of the two roots, the one
/// with the smaller encoding key.  Empty when x is a nonsquare.
std::optional<Felt> square_root(const Felt& x);

/// b^((3-q)/4) for odd-degree fields (q = 3 mod 8); always a square, and a
/// square root of b whenever b is a square.
Felt s_of_b(const Felt& b);

/// The canonical square root of -1 in an even-degree field, fixed through the
/// F_9 embedding so every field agrees on which root is "i".
Felt unit_i(const FieldDesc& f);

/// The nonsquare with the smallest encoding key.
Felt smallest_nonsquare(const FieldDesc& f);

/// True iff x is fixed by the 3^sub_degree-power Frobenius, i.e. lies in the
/// image of the degree-sub_degree subfield.
bool in_subfield(const Felt& x, int sub_degree);

}  // namespace ss3

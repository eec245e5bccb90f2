#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scharc {

/// Element of F_{p^k}, encoded as sum_i c_i p^i over its power-basis
/// coordinates. Arithmetic goes through the owning Field.
struct FqScalar {
  std::uint32_t code = 0;

  friend auto operator<=>(const FqScalar&, const FqScalar&) = default;
};

/// F_{p^k} = Z_p[t]/(modulus). Immutable; shared between all values that
/// use it. Addition and multiplication are table driven (q <= 1024).
class Field {
 public:
  /// Validates p (prime), k >= 1, and the modulus (monic, degree k,
  /// irreducible). Without a modulus, k = 1 uses t and k = 2 uses t^2 - s for
  /// the least non-square s (t^2 + t + 1 when p = 2).
  static std::shared_ptr<const Field> create(int p, int k,
                                             std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Low-to-high coefficients, length k + 1, leading 1.
  const std::vector<int>& modulus() const { return modulus_; }

  FqScalar zero() const { return {0}; }
  FqScalar one() const { return {1}; }
  /// Power-basis generator t (equals 0 for k = 1 with modulus t).
  FqScalar generator() const;
  FqScalar from_int(long v) const;
  FqScalar from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FqScalar a) const;

  FqScalar add(FqScalar a, FqScalar b) const { return {add_[a.code * q_ + b.code]}; }
  FqScalar sub(FqScalar a, FqScalar b) const { return add(a, neg(b)); }
  FqScalar neg(FqScalar a) const { return {neg_[a.code]}; }
  FqScalar mul(FqScalar a, FqScalar b) const { return {mul_[a.code * q_ + b.code]}; }
  FqScalar inv(FqScalar a) const;
  FqScalar div(FqScalar a, FqScalar b) const { return mul(a, inv(b)); }
  FqScalar pow(FqScalar a, std::uint64_t e) const;
  /// a -> a^{p^j}.
  FqScalar frobenius(FqScalar a, int j = 1) const;

  /// Absolute trace to the prime field, returned as an integer in [0, p).
  int trace(FqScalar a) const;
  /// Trace as an element of this field (embedded prime subfield).
  FqScalar trace_element(FqScalar a) const { return from_int(trace(a)); }

  bool is_square(FqScalar a) const;
  std::string to_string(FqScalar a) const;

  /// All q elements in code order.
  std::vector<FqScalar> elements() const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<int> trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Convenience matching the field_new operation.
FieldPtr field_new(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

/// Parses q = p^k into (p, k); throws NonPrime when q is not a prime power.
std::pair<int, int> split_prime_power(int q);

bool is_prime(long n);

}  // namespace scharc

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "scharc/field.hpp"

namespace scharc {

/// Exact element of Q(zeta_m), stored in the power basis 1, z, ..., z^{phi(m)-1}
/// reduced modulo the m-th cyclotomic polynomial. Binary operations embed
/// both operands into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long v);  // NOLINT: integers promote implicitly
  explicit Cyclotomic(const mpq_class& v);

  /// zeta_m^e.
  static Cyclotomic root(int m, long e = 1);
  /// sum_e counts[e] zeta_m^e, counts.size() == m.
  static Cyclotomic from_counts(int m, const std::vector<long>& counts);
  /// Raw construction; coefficients are reduced if longer than phi(m).
  static Cyclotomic from_coeffs(int m, std::vector<mpq_class> coeffs);

  int conductor() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Rational value; only meaningful when is_rational().
  mpq_class rational() const;
  /// True when every coefficient has denominator 1.
  bool has_integral_coeffs() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const mpq_class& r) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  /// Exact inverse; throws BadArgument on zero.
  Cyclotomic inverse() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  /// Galois automorphism zeta_m -> zeta_m^t, gcd(t, m) = 1.
  Cyclotomic galois(long t) const;

  /// Same value, written over the smallest conductor that contains it.
  Cyclotomic minimized() const;
  /// Same value over conductor L (a multiple of the current conductor).
  Cyclotomic embedded(int L) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Canonical polynomial in z (a fixed primitive root of the minimized
  /// conductor), e.g. "-1 - z^2" or "3/2*z".
  std::string to_string() const;

 private:
  Cyclotomic(int m, std::vector<mpq_class> c) : m_(m), c_(std::move(c)) {}
  void reduce_raw(std::vector<mpq_class>& raw) const;

  int m_ = 1;
  std::vector<mpq_class> c_;
};

Cyclotomic operator*(const mpq_class& r, const Cyclotomic& x);

/// theta(a) = zeta_p^{Tr(a)}.
Cyclotomic theta(const Field& F, FqScalar a);

int euler_phi(int m);
long lcm_int(long a, long b);
long gcd_int(long a, long b);
/// Integer coefficients (low to high) of the m-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int m);

}  // namespace scharc

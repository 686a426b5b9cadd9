#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "skein/big_complex.hpp"

namespace skein {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Computed by dividing x^n - 1 by every Phi_d with d | n, d < n.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// The field Q(A) with A a primitive 2N-th root of unity (N odd), presented
/// as Q[x] / Phi_{2N}(x). Elements are coefficient vectors in the power basis
/// 1, A, ..., A^{d-1} with d = phi(2N).
class CyclotomicField {
 public:
  explicit CyclotomicField(int N);

  int N() const { return N_; }
  int degree() const { return degree_; }
  const std::vector<mpz_class>& modulus() const { return modulus_; }

  /// Reduced coefficients of A^j for 0 <= j < 2N.
  const std::vector<mpq_class>& power(int j) const { return powers_[static_cast<std::size_t>(j)]; }

 private:
  int N_;
  int degree_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpq_class>> powers_;
};

/// Exact element of Q(A).
///
/// A number without a field is a plain rational; it combines with elements
/// of any field. Two elements with fields must share the same N.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : coeffs_{mpq_class(0)} {}
  CyclotomicNumber(long value) : coeffs_{mpq_class(value)} {}  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(mpq_class value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }  // NOLINT
  CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs);

  /// A^k, reduced.
  static CyclotomicNumber root_power(const std::shared_ptr<const CyclotomicField>& field, long k);

  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  /// Canonical coefficients; length equals the field degree (1 without field).
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  CyclotomicNumber inverse() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a);

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Embedding into C sending A to exp(i pi / N).
  BigComplex to_complex(long precision_bits) const;
  double magnitude() const;
  /// e.g. "2*A - 1" or "-1/2*A^3 + 4".
  std::string to_string() const;

 private:
  void adopt_field(const CyclotomicNumber& other);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpq_class> coeffs_;
};

CyclotomicNumber pow(const CyclotomicNumber& z, long exponent);
inline double magnitude(const CyclotomicNumber& z) { return z.magnitude(); }

/// Parses "p", "p/q" or a plain decimal such as "-1.25" into an exact rational.
mpq_class parse_rational(const std::string& text);
/// Canonical "num/den" text.
std::string rational_to_string(const mpq_class& q);

}  // namespace skein

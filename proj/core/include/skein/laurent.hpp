#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace skein {

/// Element of Q[A, A^{-1}] with A left symbolic. Used to normalize skein
/// expressions for a generic parameter A, before any root of unity is chosen.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT(google-explicit-constructor)
  LaurentPoly(mpq_class value);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(mpq_class coeff, long exponent);

  const std::map<long, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Only monomials c*A^k are invertible.
  LaurentPoly inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Highest power first, e.g. "A^2 - A^-2" or "-1/2*A + 3".
  std::string to_string() const;

 private:
  void add_term(long exponent, const mpq_class& coeff);

  std::map<long, mpq_class> terms_;
};

/// Coefficient ring for a symbolic A. Mirrors the subset of RootSystem's
/// interface that expression normalization needs.
class LaurentRing {
 public:
  using value_type = LaurentPoly;

  LaurentPoly zero() const { return {}; }
  LaurentPoly one() const { return LaurentPoly(1L); }
  LaurentPoly from_int(long v) const { return LaurentPoly(v); }
  LaurentPoly from_rational(const mpq_class& q) const { return LaurentPoly(q); }
  LaurentPoly a_pow(long k) const { return LaurentPoly::monomial(mpq_class(1), k); }
  LaurentPoly imaginary_unit() const;  // throws Unsupported
  LaurentPoly inverse(const LaurentPoly& x) const { return x.inverse(); }
  bool is_zero(const LaurentPoly& x, double = 0.0) const { return x.is_zero(); }
  double magnitude(const LaurentPoly& x) const;
  std::string to_string(const LaurentPoly& x) const { return x.to_string(); }
};

}  // namespace skein

#pragma once

#include <algorithm>
#include <string>

#include "skein/big_float.hpp"

namespace skein {

/// Arbitrary-precision complex number with independent MPFR real and
/// imaginary parts. Precision follows the BigFloat rule: results carry the
/// largest precision among their operands.
class BigComplex {
 public:
  explicit BigComplex(long precision_bits = kMinPrecisionBits)
      : re_(precision_bits), im_(precision_bits) {}
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(long re, long precision_bits) : re_(re, precision_bits), im_(precision_bits) {}
  BigComplex(double re, double im, long precision_bits)
      : re_(re, precision_bits), im_(im, precision_bits) {}

  /// exp(i * angle) for a real angle.
  static BigComplex polar(const BigFloat& modulus, const BigFloat& angle);
  static BigComplex imaginary_unit(long precision_bits);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }

  long precision() const { return std::max(re_.precision(), im_.precision()); }
  void ensure_precision(long bits) {
    re_.ensure_precision(bits);
    im_.ensure_precision(bits);
  }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  BigFloat abs() const;
  BigFloat norm() const;  // |z|^2
  BigFloat arg() const;
  BigComplex conj() const;
  double magnitude() const { return abs().to_double(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);

  /// this += a * b without allocating; `scratch` must hold two temporaries.
  void add_product(const BigComplex& a, const BigComplex& b, BigFloat (&scratch)[2]);
  /// this -= a * b without allocating.
  void sub_product(const BigComplex& a, const BigComplex& b, BigFloat (&scratch)[2]);
  /// this += conj(a) * b without allocating.
  void add_conj_product(const BigComplex& a, const BigComplex& b, BigFloat (&scratch)[2]);

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  /// Throws SkeinError(DivisionByZero) when b is exactly zero.
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a);

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex pow(const BigComplex& z, long exponent);
BigComplex sqrt(const BigComplex& z);  // principal branch
BigComplex exp(const BigComplex& z);
/// Principal n-th root: argument in (-pi/n, pi/n].
BigComplex nth_root(const BigComplex& z, long n);

inline double magnitude(const BigComplex& z) { return z.magnitude(); }

}  // namespace skein

#include "skein/big_complex.hpp"

#include "skein/error.hpp"

namespace skein {

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const long p = precision();
  re_.ensure_precision(p);
  im_.ensure_precision(p);
}

BigComplex BigComplex::polar(const BigFloat& modulus, const BigFloat& angle) {
  const long p = std::max(modulus.precision(), angle.precision());
  BigFloat s(p);
  BigFloat c(p);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return BigComplex(modulus * c, modulus * s);
}

BigComplex BigComplex::imaginary_unit(long precision_bits) {
  return BigComplex(BigFloat(0L, precision_bits), BigFloat(1L, precision_bits));
}

BigFloat BigComplex::abs() const { return hypot(re_, im_); }

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigFloat BigComplex::arg() const { return atan2(im_, re_); }

BigComplex BigComplex::conj() const { return BigComplex(re_, -im_); }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  *this = *this * rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  *this = *this / rhs;
  return *this;
}

void BigComplex::add_product(const BigComplex& a, const BigComplex& b, BigFloat (&scratch)[2]) {
  const long p = std::max({precision(), a.precision(), b.precision()});
  ensure_precision(p);
  scratch[0].ensure_precision(p);
  scratch[1].ensure_precision(p);
  // re += a.re*b.re - a.im*b.im ; im += a.re*b.im + a.im*b.re
  mpfr_mul(scratch[0].get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(scratch[1].get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_sub(scratch[0].get(), scratch[0].get(), scratch[1].get(), MPFR_RNDN);
  mpfr_add(re_.get(), re_.get(), scratch[0].get(), MPFR_RNDN);
  mpfr_mul(scratch[0].get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_mul(scratch[1].get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(scratch[0].get(), scratch[0].get(), scratch[1].get(), MPFR_RNDN);
  mpfr_add(im_.get(), im_.get(), scratch[0].get(), MPFR_RNDN);
}

void BigComplex::add_conj_product(const BigComplex& a, const BigComplex& b,
                                  BigFloat (&scratch)[2]) {
  const long p = std::max({precision(), a.precision(), b.precision()});
  ensure_precision(p);
  scratch[0].ensure_precision(p);
  scratch[1].ensure_precision(p);
  mpfr_fmma(scratch[0].get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(re_.get(), re_.get(), scratch[0].get(), MPFR_RNDN);
  mpfr_fmms(scratch[1].get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(im_.get(), im_.get(), scratch[1].get(), MPFR_RNDN);
}

void BigComplex::sub_product(const BigComplex& a, const BigComplex& b, BigFloat (&scratch)[2]) {
  const long p = std::max({precision(), a.precision(), b.precision()});
  ensure_precision(p);
  scratch[0].ensure_precision(p);
  scratch[1].ensure_precision(p);
  mpfr_mul(scratch[0].get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(scratch[1].get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_sub(scratch[0].get(), scratch[0].get(), scratch[1].get(), MPFR_RNDN);
  mpfr_sub(re_.get(), re_.get(), scratch[0].get(), MPFR_RNDN);
  mpfr_mul(scratch[0].get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_mul(scratch[1].get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(scratch[0].get(), scratch[0].get(), scratch[1].get(), MPFR_RNDN);
  mpfr_sub(im_.get(), im_.get(), scratch[0].get(), MPFR_RNDN);
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_zero()) throw SkeinError(ErrorCode::DivisionByZero, "complex division by zero");
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (abs(b.re_) >= abs(b.im_)) {
    const BigFloat r = b.im_ / b.re_;
    const BigFloat d = b.re_ + b.im_ * r;
    return BigComplex((a.re_ + a.im_ * r) / d, (a.im_ - a.re_ * r) / d);
  }
  const BigFloat r = b.re_ / b.im_;
  const BigFloat d = b.re_ * r + b.im_;
  return BigComplex((a.re_ * r + a.im_) / d, (a.im_ * r - a.re_) / d);
}

BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re_, -a.im_); }

std::string BigComplex::to_string() const {
  std::string im = im_.to_string(20);
  if (im.front() != '-') im = "+" + im;
  return re_.to_string(20) + im + "i";
}

BigComplex pow(const BigComplex& z, long exponent) {
  if (exponent < 0) {
    return BigComplex(1L, z.precision()) / pow(z, -exponent);
  }
  BigComplex result(1L, z.precision());
  BigComplex base = z;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return BigComplex(z.precision());
  return BigComplex::polar(sqrt(z.abs()), z.arg() / BigFloat(2L, z.precision()));
}

BigComplex exp(const BigComplex& z) { return BigComplex::polar(exp(z.re()), z.im()); }

BigComplex nth_root(const BigComplex& z, long n) {
  if (n <= 0) throw SkeinError(ErrorCode::InvalidArgument, "nth_root needs n >= 1");
  if (z.is_zero() || n == 1) return z;
  const long p = z.precision();
  BigFloat modulus(p);
  mpfr_rootn_ui(modulus.get(), z.abs().get(), static_cast<unsigned long>(n), MPFR_RNDN);
  // atan2 returns the argument in [-pi, pi]; -pi only arises for a signed
  // negative zero imaginary part, which we fold onto +pi.
  BigFloat angle = z.arg();
  if (angle.sign() < 0 && z.im().is_zero()) angle = -angle;
  return BigComplex::polar(modulus, angle / BigFloat(n, p));
}

}  // namespace skein

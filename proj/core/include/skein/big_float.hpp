#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace skein {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kMaxPrecisionBits = 2048;

/// Owning wrapper around an MPFR float.
///
/// Every value carries its own precision. Binary operations produce a result
/// at the larger of the two operand precisions, and compound assignment raises
/// the precision of the left-hand side when needed, so a computation never
/// loses bits to an operand that happened to be created at lower precision.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = kMinPrecisionBits);
  BigFloat(long value, long precision_bits);
  BigFloat(double value, long precision_bits);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  /// Accepts any decimal or scientific literal understood by mpfr_set_str.
  static BigFloat parse(std::string_view text, long precision_bits);
  static BigFloat pi(long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Raises the precision in place (rounding is exact when growing).
  void ensure_precision(long precision_bits);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with enough digits to round-trip at this precision.
  std::string to_string() const;
  std::string to_string(std::size_t digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend void swap(BigFloat& a, BigFloat& b) noexcept { mpfr_swap(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);

}  // namespace skein

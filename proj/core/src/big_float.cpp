#include "skein/big_float.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "skein/error.hpp"

namespace skein {

namespace {

mpfr_prec_t clamp_precision(long bits) {
  return static_cast<mpfr_prec_t>(std::clamp(bits, 2L, kMaxPrecisionBits));
}

long max_precision(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat BigFloat::parse(std::string_view text, long precision_bits) {
  BigFloat out(precision_bits);
  std::string buffer(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (buffer.empty() || end == nullptr || *end != '\0') {
    throw SkeinError(ErrorCode::InvalidArgument, "not a decimal number: '" + buffer + "'");
  }
  return out;
}

BigFloat BigFloat::pi(long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

void BigFloat::ensure_precision(long precision_bits) {
  if (precision() < precision_bits) {
    mpfr_prec_round(value_, clamp_precision(precision_bits), MPFR_RNDN);
  }
}

std::string BigFloat::to_string() const {
  // Enough decimal digits for the value to round-trip at its own precision.
  const auto digits = static_cast<std::size_t>(
      1 + std::ceil(static_cast<double>(precision()) * 0.30102999566398120));
  return to_string(digits);
}

std::string BigFloat::to_string(std::size_t digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return mpfr_signbit(value_) ? "-0" : "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, std::max<std::size_t>(digits, 2), value_,
                           MPFR_RNDN);
  std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
  std::string mantissa(raw);
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // mpfr gives 0.DDDD x 10^exponent; rewrite as D.DDD e(exponent-1).
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  const long e = static_cast<long>(exponent) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  ensure_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_precision(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_precision(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_precision(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_precision(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define SKEIN_UNARY(name, fn)                     \
  BigFloat name(const BigFloat& x) {              \
    BigFloat out(x.precision());                  \
    fn(out.get(), x.get(), MPFR_RNDN);            \
    return out;                                   \
  }

SKEIN_UNARY(abs, mpfr_abs)
SKEIN_UNARY(sqrt, mpfr_sqrt)
SKEIN_UNARY(exp, mpfr_exp)
SKEIN_UNARY(log, mpfr_log)
SKEIN_UNARY(sin, mpfr_sin)
SKEIN_UNARY(cos, mpfr_cos)

#undef SKEIN_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat out(max_precision(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat out(max_precision(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

}  // namespace skein

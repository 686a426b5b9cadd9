#include "skein/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "skein/error.hpp"

namespace skein {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.emplace_back(0);
}

bool is_zero_poly(const QPoly& p) {
  for (const auto& c : p) {
    if (c != 0) return false;
  }
  return true;
}

int degree(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

// Returns remainder of a / b; quotient written to q.
QPoly divmod(QPoly a, const QPoly& b, QPoly& q) {
  const int db = degree(b);
  const int da = degree(a);
  q.assign(static_cast<std::size_t>(std::max(da - db + 1, 1)), mpq_class(0));
  const mpq_class lead = b[static_cast<std::size_t>(db)];
  for (int i = da; i >= db; --i) {
    const mpq_class c = a[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
  }
  trim(a);
  trim(q);
  return a;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

void check_compatible(const CyclotomicField* a, const CyclotomicField* b) {
  if (a != nullptr && b != nullptr && a != b && a->N() != b->N()) {
    throw SkeinError(ErrorCode::InvalidArgument,
                     "cyclotomic numbers from different fields (N=" + std::to_string(a->N()) +
                         " vs N=" + std::to_string(b->N()) + ")");
  }
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw SkeinError(ErrorCode::InvalidArgument, "cyclotomic index must be >= 1");
  // x^n - 1
  QPoly acc(static_cast<std::size_t>(n) + 1, mpq_class(0));
  acc[0] = -1;
  acc[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto phi_d = cyclotomic_polynomial(d);
    QPoly divisor(phi_d.begin(), phi_d.end());
    QPoly q;
    const QPoly r = divmod(acc, divisor, q);
    if (!is_zero_poly(r)) throw SkeinError(ErrorCode::InvalidArgument, "cyclotomic division failed");
    acc = q;
  }
  std::vector<mpz_class> out;
  out.reserve(acc.size());
  for (const auto& c : acc) out.emplace_back(c.get_num());
  return out;
}

CyclotomicField::CyclotomicField(int N) : N_(N) {
  if (N < 1 || N % 2 == 0) {
    throw SkeinError(ErrorCode::InvalidArgument, "N must be odd and >= 1, got " + std::to_string(N));
  }
  modulus_ = cyclotomic_polynomial(2 * N);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  const auto d = static_cast<std::size_t>(degree_);
  powers_.reserve(static_cast<std::size_t>(2 * N));
  QPoly current(d, mpq_class(0));
  current[0] = 1;
  for (int j = 0; j < 2 * N; ++j) {
    powers_.push_back(current);
    // multiply by x and reduce with the monic modulus
    QPoly next(d, mpq_class(0));
    const mpq_class top = current[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) next[i] = current[i - 1];
    next[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < d; ++i) next[i] -= top * mpq_class(modulus_[i]);
    }
    if (d == 1) {
      next[0] = -top * mpq_class(modulus_[0]);
    }
    current = std::move(next);
  }
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field,
                                   std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto& q : coeffs_) q.canonicalize();
  if (!field_) {
    trim(coeffs_);
    if (coeffs_.size() > 1) {
      throw SkeinError(ErrorCode::InvalidArgument, "non-rational coefficients need a field");
    }
    return;
  }
  const auto d = static_cast<std::size_t>(field_->degree());
  if (coeffs_.size() > d) {
    // reduce higher powers through the precomputed table
    if (coeffs_.size() > static_cast<std::size_t>(2 * field_->N())) {
      throw SkeinError(ErrorCode::InvalidArgument, "too many coefficients for field");
    }
    std::vector<mpq_class> reduced(coeffs_.begin(), coeffs_.begin() + static_cast<long>(d));
    for (std::size_t j = d; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const auto& pj = field_->power(static_cast<int>(j));
      for (std::size_t i = 0; i < d; ++i) reduced[i] += coeffs_[j] * pj[i];
    }
    coeffs_ = std::move(reduced);
  }
  coeffs_.resize(d, mpq_class(0));
}

CyclotomicNumber CyclotomicNumber::root_power(const std::shared_ptr<const CyclotomicField>& field,
                                              long k) {
  const long period = 2L * field->N();
  const long j = ((k % period) + period) % period;
  return CyclotomicNumber(field, field->power(static_cast<int>(j)));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

void CyclotomicNumber::adopt_field(const CyclotomicNumber& other) {
  check_compatible(field_.get(), other.field_.get());
  if (!field_ && other.field_) {
    field_ = other.field_;
    coeffs_.resize(static_cast<std::size_t>(field_->degree()), mpq_class(0));
  }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  adopt_field(rhs);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  adopt_field(rhs);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  *this = *this * rhs;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
  *this = *this / rhs;
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  check_compatible(a.field_.get(), b.field_.get());
  const auto& field = a.field_ ? a.field_ : b.field_;
  if (a.is_rational() || b.is_rational()) {
    // cheap scalar path
    const CyclotomicNumber& vec = a.is_rational() ? b : a;
    const mpq_class s = a.is_rational() ? a.coeffs_[0] : b.coeffs_[0];
    std::vector<mpq_class> out = vec.coeffs_;
    for (auto& c : out) c *= s;
    if (!field) return CyclotomicNumber(out[0]);
    return CyclotomicNumber(field, std::move(out));
  }
  std::vector<mpq_class> raw(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CyclotomicNumber(field, std::move(raw));
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
  CyclotomicNumber out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  check_compatible(a.field_.get(), b.field_.get());
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const mpq_class ai = i < a.coeffs_.size() ? a.coeffs_[i] : mpq_class(0);
    const mpq_class bi = i < b.coeffs_.size() ? b.coeffs_[i] : mpq_class(0);
    if (ai != bi) return false;
  }
  return true;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw SkeinError(ErrorCode::DivisionByZero, "inverse of zero in Q(A)");
  if (is_rational()) {
    CyclotomicNumber out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid: find s with s * a + t * Phi = 1.
  QPoly r0(field_->modulus().begin(), field_->modulus().end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{mpq_class(0)};
  QPoly s1{mpq_class(1)};
  while (degree(r1) > 0) {
    QPoly q;
    QPoly r2 = divmod(r0, r1, q);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi is irreducible.
  const mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  if (s1.size() > static_cast<std::size_t>(field_->degree())) {
    QPoly q;
    QPoly modulus(field_->modulus().begin(), field_->modulus().end());
    s1 = divmod(s1, modulus, q);
  }
  return CyclotomicNumber(field_, std::move(s1));
}

BigComplex CyclotomicNumber::to_complex(long precision_bits) const {
  BigComplex out(precision_bits);
  if (!field_) {
    BigFloat re(precision_bits);
    mpfr_set_q(re.get(), coeffs_[0].get_mpq_t(), MPFR_RNDN);
    return BigComplex(re, BigFloat(precision_bits));
  }
  const BigFloat angle = BigFloat::pi(precision_bits) / BigFloat(static_cast<long>(field_->N()), precision_bits);
  const BigComplex a = BigComplex::polar(BigFloat(1L, precision_bits), angle);
  BigComplex power(1L, precision_bits);
  for (const auto& c : coeffs_) {
    if (c != 0) {
      BigFloat q(precision_bits);
      mpfr_set_q(q.get(), c.get_mpq_t(), MPFR_RNDN);
      out += BigComplex(q * power.re(), q * power.im());
    }
    power *= a;
  }
  return out;
}

double CyclotomicNumber::magnitude() const {
  if (!field_) return std::abs(coeffs_[0].get_d());
  const double angle = std::numbers::pi / field_->N();
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) acc += coeffs_[j].get_d() * std::polar(1.0, angle * static_cast<double>(j));
  }
  return std::abs(acc);
}

std::string CyclotomicNumber::to_string() const {
  std::string out;
  for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 0; --j) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string power = j == 0 ? "" : (j == 1 ? "A" : "A^" + std::to_string(j));
    if (j == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power;
    } else {
      out += mag.get_str() + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

CyclotomicNumber pow(const CyclotomicNumber& z, long exponent) {
  if (exponent < 0) return pow(z.inverse(), -exponent);
  CyclotomicNumber result(1L);
  CyclotomicNumber base = z;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  if (z.field() && !result.field()) result += CyclotomicNumber(z.field(), {mpq_class(0)});
  return result;
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw SkeinError(ErrorCode::InvalidArgument, "empty rational literal");
  const auto dot = text.find('.');
  const auto exp_pos = text.find_first_of("eE");
  if (dot == std::string::npos && exp_pos == std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
      throw SkeinError(ErrorCode::InvalidArgument, "not a rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) throw SkeinError(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  // decimal: sign, digits, optional fraction, optional exponent
  std::string mantissa = exp_pos == std::string::npos ? text : text.substr(0, exp_pos);
  long exponent = 0;
  if (exp_pos != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(text.substr(exp_pos + 1), &used);
      if (used != text.size() - exp_pos - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw SkeinError(ErrorCode::InvalidArgument, "bad exponent in '" + text + "'");
    }
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (std::size_t i = 0; i < mantissa.size(); ++i) {
    const char ch = mantissa[i];
    if ((ch == '-' || ch == '+') && i == 0) {
      if (ch == '-') digits += '-';
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      digits += ch;
      if (seen_dot) ++frac_digits;
    } else {
      throw SkeinError(ErrorCode::InvalidArgument, "not a decimal literal: '" + text + "'");
    }
  }
  if (digits.empty() || digits == "-") {
    throw SkeinError(ErrorCode::InvalidArgument, "not a decimal literal: '" + text + "'");
  }
  mpq_class q(mpz_class(digits, 10));
  const long shift = exponent - frac_digits;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0) {
    q *= ten_pow;
  } else {
    q /= ten_pow;
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace skein

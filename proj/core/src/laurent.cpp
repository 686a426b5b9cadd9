#include "skein/laurent.hpp"

#include <cmath>

#include "skein/error.hpp"

namespace skein {

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_.emplace(0, mpq_class(value));
}

LaurentPoly::LaurentPoly(mpq_class value) {
  if (value != 0) terms_.emplace(0, std::move(value));
}

LaurentPoly LaurentPoly::monomial(mpq_class coeff, long exponent) {
  LaurentPoly out;
  out.add_term(exponent, coeff);
  return out;
}

void LaurentPoly::add_term(long exponent, const mpq_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::inverse() const {
  if (terms_.size() != 1) {
    throw SkeinError(ErrorCode::Unsupported,
                     "only monomials c*A^k are invertible with symbolic A, got '" + to_string() + "'");
  }
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    const mpq_class& c = it->second;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string power = e == 0 ? "" : (e == 1 ? "A" : "A^" + std::to_string(e));
    if (e == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power;
    } else {
      out += mag.get_str() + "*" + power;
    }
  }
  return out;
}

LaurentPoly LaurentRing::imaginary_unit() const {
  throw SkeinError(ErrorCode::Unsupported, "the imaginary unit is not available with symbolic A");
}

double LaurentRing::magnitude(const LaurentPoly& x) const {
  // Coefficient 1-norm; only used to scale zero tests, which are exact here.
  double total = 0.0;
  for (const auto& [e, c] : x.terms()) total += std::abs(c.get_d());
  return total;
}

}  // namespace skein

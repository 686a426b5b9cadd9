#include "skein/root_system.hpp"

#include <algorithm>
#include <cmath>

#include "skein/error.hpp"

namespace skein {

std::string to_string(Backend backend) {
  return backend == Backend::ExactCyclotomic ? "exact" : "bigfloat";
}

Tolerance Tolerance::for_precision(long precision_bits) {
  return Tolerance{std::ldexp(1.0, -static_cast<int>(precision_bits / 2))};
}

template <class G>
RootSystem<G> make_root_system_impl(int N, long precision_bits) {
  if (N < 1 || N % 2 == 0) {
    throw SkeinError(ErrorCode::InvalidArgument, "N must be odd and >= 1, got " + std::to_string(N));
  }
  RootSystem<G> rs;
  rs.N_ = N;
  const long period = 2L * N;
  rs.powers_.reserve(static_cast<std::size_t>(period));
  if constexpr (is_exact_v<G>) {
    rs.field_ = std::make_shared<const CyclotomicField>(N);
    for (long k = 0; k < period; ++k) rs.powers_.push_back(CyclotomicNumber::root_power(rs.field_, k));
  } else {
    if (precision_bits < kMinPrecisionBits || precision_bits > kMaxPrecisionBits) {
      throw SkeinError(ErrorCode::InvalidArgument,
                       "precision must be in [" + std::to_string(kMinPrecisionBits) + ", " +
                           std::to_string(kMaxPrecisionBits) + "] bits");
    }
    rs.precision_bits_ = precision_bits;
    rs.tolerance_ = Tolerance::for_precision(precision_bits);
    // Each power is evaluated directly so no rounding error accumulates.
    const BigFloat step = BigFloat::pi(precision_bits) / BigFloat(static_cast<long>(N), precision_bits);
    const BigFloat one(1L, precision_bits);
    for (long k = 0; k < period; ++k) {
      if (k == 0) {
        rs.powers_.emplace_back(1L, precision_bits);
      } else if (k == N) {
        rs.powers_.emplace_back(-1L, precision_bits);
      } else {
        rs.powers_.push_back(BigComplex::polar(one, step * BigFloat(k, precision_bits)));
      }
    }
  }
  return rs;
}

ExactRootSystem make_exact_root_system(int N) { return make_root_system_impl<CyclotomicNumber>(N, 0); }

NumericRootSystem make_numeric_root_system(int N, long precision_bits) {
  return make_root_system_impl<BigComplex>(N, precision_bits);
}

template <class F>
RootSystem<F> RootSystem<F>::with_tolerance(Tolerance tol) const {
  if constexpr (!is_exact_v<F>) {
    if (!(tol.rel_eps > 0.0)) {
      throw SkeinError(ErrorCode::InvalidArgument, "the approximate backend needs rel_eps > 0");
    }
  } else {
    if (tol.rel_eps < 0.0) throw SkeinError(ErrorCode::InvalidArgument, "rel_eps must be >= 0");
  }
  RootSystem out = *this;
  out.tolerance_ = tol;
  return out;
}

template <class F>
const F& RootSystem<F>::a_pow(long k) const {
  const long period = 2L * N_;
  const long j = ((k % period) + period) % period;
  return powers_[static_cast<std::size_t>(j)];
}

template <class F>
F RootSystem<F>::zero() const {
  if constexpr (is_exact_v<F>) {
    return CyclotomicNumber(field_, {mpq_class(0)});
  } else {
    return BigComplex(precision_bits_);
  }
}

template <class F>
F RootSystem<F>::from_int(long v) const {
  if constexpr (is_exact_v<F>) {
    return CyclotomicNumber(field_, {mpq_class(v)});
  } else {
    return BigComplex(v, precision_bits_);
  }
}

template <class F>
F RootSystem<F>::from_rational(const mpq_class& q) const {
  if constexpr (is_exact_v<F>) {
    return CyclotomicNumber(field_, {q});
  } else {
    BigFloat re(precision_bits_);
    mpfr_set_q(re.get(), q.get_mpq_t(), MPFR_RNDN);
    return BigComplex(std::move(re), BigFloat(precision_bits_));
  }
}

template <class F>
F RootSystem<F>::imaginary_unit() const {
  if constexpr (is_exact_v<F>) {
    throw SkeinError(ErrorCode::Unsupported,
                     "the imaginary unit is not an element of Q(A) for odd N");
  } else {
    return BigComplex::imaginary_unit(precision_bits_);
  }
}

template <class F>
bool RootSystem<F>::is_zero(const F& x, double context) const {
  if constexpr (is_exact_v<F>) {
    return x.is_zero();
  } else {
    if (x.is_zero()) return true;
    return x.magnitude() < tolerance_.rel_eps * (1.0 + std::abs(context));
  }
}

template <class F>
bool RootSystem<F>::approx_eq(const F& a, const F& b) const {
  if constexpr (is_exact_v<F>) {
    return a == b;
  } else {
    if (a == b) return true;
    const double diff = (a - b).magnitude();
    return diff <= tolerance_.rel_eps * std::max(a.magnitude(), b.magnitude());
  }
}

template <class F>
double RootSystem<F>::magnitude(const F& x) const {
  return x.magnitude();
}

template <class F>
F RootSystem<F>::div(const F& a, const F& b) const {
  if constexpr (is_exact_v<F>) {
    if (b.is_zero()) throw SkeinError(ErrorCode::DivisionByZero, "division by zero in Q(A)");
    return a / b;
  } else {
    if (is_zero(b, 0.0)) {
      throw SkeinError(ErrorCode::DivisionByZero,
                       "divisor magnitude " + std::to_string(b.magnitude()) + " is below tolerance");
    }
    return a / b;
  }
}

template <class F>
F RootSystem<F>::pow(const F& x, long exponent) const {
  if (exponent < 0) return pow(inverse(x), -exponent);
  F result = one();
  F base = x;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

template <class F>
std::string RootSystem<F>::to_string(const F& x) const {
  return x.to_string();
}

template <class F>
F field_op(const RootSystem<F>& rs, const F& a, const F& b, FieldOp op, long exponent) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return rs.div(a, b);
    case FieldOp::Pow: return rs.pow(a, exponent);
  }
  throw SkeinError(ErrorCode::InvalidArgument, "unknown field operation");
}

template class RootSystem<CyclotomicNumber>;
template class RootSystem<BigComplex>;
template CyclotomicNumber field_op(const ExactRootSystem&, const CyclotomicNumber&,
                                   const CyclotomicNumber&, FieldOp, long);
template BigComplex field_op(const NumericRootSystem&, const BigComplex&, const BigComplex&, FieldOp,
                             long);

BigComplex numeric_bridge(const CyclotomicNumber& c, long precision_bits) {
  return c.to_complex(precision_bits);
}

std::array<BigComplex, 2> solve_quadratic(const NumericRootSystem& rs, const BigComplex& a,
                                          const BigComplex& b, const BigComplex& c) {
  if (a.is_zero()) throw SkeinError(ErrorCode::InvalidArgument, "leading coefficient is zero");
  const BigComplex disc = b * b - rs.from_int(4) * a * c;
  BigComplex s = sqrt(disc);
  // choose the sign of s that avoids cancellation in b + s
  const BigFloat align = b.re() * s.re() + b.im() * s.im();
  if (align.sign() < 0) s = -s;
  const BigComplex q = -(b + s) / rs.from_int(2);
  if (q.is_zero()) {
    // b = 0 and disc = 0: double root at zero
    return {rs.zero(), rs.zero()};
  }
  return {q / a, c / q};
}

std::array<CyclotomicNumber, 2> solve_quadratic(const ExactRootSystem&, const CyclotomicNumber&,
                                                const CyclotomicNumber&, const CyclotomicNumber&) {
  throw SkeinError(ErrorCode::Unsupported,
                   "square roots are not available in the exact cyclotomic backend");
}

BigComplex nth_root(const NumericRootSystem& rs, const BigComplex& y, long n) {
  BigComplex out = nth_root(y, n);
  out.ensure_precision(rs.precision_bits());
  return out;
}

CyclotomicNumber nth_root(const ExactRootSystem&, const CyclotomicNumber&, long) {
  throw SkeinError(ErrorCode::Unsupported, "nth_root is not supported in the exact cyclotomic backend");
}

}  // namespace skein

#pragma once

#include <gmpxx.h>

#include <array>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "skein/big_complex.hpp"
#include "skein/cyclotomic.hpp"

namespace skein {

enum class Backend { ExactCyclotomic, BigComplex };

std::string to_string(Backend backend);

inline constexpr long kDefaultPrecisionBits = 256;

/// Relative comparison threshold. Zero is only meaningful for exact arithmetic.
struct Tolerance {
  double rel_eps = 0.0;

  /// 2^{-precision/2}: half the mantissa is kept as verification headroom.
  static Tolerance for_precision(long precision_bits);
};

template <class F>
inline constexpr bool is_exact_v = std::is_same_v<F, CyclotomicNumber>;

/// The odd integer N together with a primitive 2N-th root of unity A
/// (so A^N = -1), realized in one of the two scalar backends.
///
/// A RootSystem is the arithmetic context every construction runs in: it
/// supplies the constants, the powers of A, and the zero test used to decide
/// whether a computed residual counts as vanishing.
template <class F>
class RootSystem {
 public:
  using value_type = F;

  int N() const { return N_; }
  Backend backend() const { return is_exact_v<F> ? Backend::ExactCyclotomic : Backend::BigComplex; }
  /// Working precision; 0 for the exact backend.
  long precision_bits() const { return precision_bits_; }
  const Tolerance& tolerance() const { return tolerance_; }
  RootSystem with_tolerance(Tolerance tol) const;

  const F& A() const { return powers_[1]; }
  /// A^k for any integer k (A has order 2N).
  const F& a_pow(long k) const;

  F zero() const;
  F one() const { return powers_[0]; }
  F from_int(long v) const;
  F from_rational(const mpq_class& q) const;
  /// Complex unit i. Only the BigComplex backend provides it.
  F imaginary_unit() const;

  /// Exact backend: exact zero. BigComplex backend:
  /// |x| < rel_eps * (1 + context), with context the largest operand magnitude
  /// of the enclosing operation.
  bool is_zero(const F& x, double context = 0.0) const;
  /// Exact equality, or |a - b| <= rel_eps * max(|a|, |b|).
  bool approx_eq(const F& a, const F& b) const;
  double magnitude(const F& x) const;

  /// Division that reports a (numerically) vanishing divisor as an error.
  F div(const F& a, const F& b) const;
  F inverse(const F& x) const { return div(one(), x); }
  F pow(const F& x, long exponent) const;

  std::string to_string(const F& x) const;

  /// Only meaningful for the exact backend.
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

  template <class G>
  friend RootSystem<G> make_root_system_impl(int N, long precision_bits);

 private:
  RootSystem() = default;

  int N_ = 1;
  long precision_bits_ = 0;
  Tolerance tolerance_;
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<F> powers_;  // A^0 .. A^{2N-1}
};

using ExactRootSystem = RootSystem<CyclotomicNumber>;
using NumericRootSystem = RootSystem<BigComplex>;

/// Rejects even or nonpositive N.
ExactRootSystem make_exact_root_system(int N);
/// A = exp(i pi / N) at the given precision (>= 64 bits).
NumericRootSystem make_numeric_root_system(int N, long precision_bits = kDefaultPrecisionBits);

enum class FieldOp { Add, Sub, Mul, Div, Pow };

/// Single entry point for the five field operations; `exponent` is used by Pow.
template <class F>
F field_op(const RootSystem<F>& rs, const F& a, const F& b, FieldOp op, long exponent = 0);

/// Embedding Q(A) -> C that sends A to exp(i pi / N).
BigComplex numeric_bridge(const CyclotomicNumber& c, long precision_bits);

/// Both roots of a y^2 + b y + c = 0, computed with the cancellation-free
/// formulation. BigComplex backend only.
std::array<BigComplex, 2> solve_quadratic(const NumericRootSystem& rs, const BigComplex& a,
                                          const BigComplex& b, const BigComplex& c);
std::array<CyclotomicNumber, 2> solve_quadratic(const ExactRootSystem& rs,
                                                const CyclotomicNumber& a,
                                                const CyclotomicNumber& b,
                                                const CyclotomicNumber& c);

/// Principal n-th root. The exact backend reports Unsupported.
BigComplex nth_root(const NumericRootSystem& rs, const BigComplex& y, long n);
CyclotomicNumber nth_root(const ExactRootSystem& rs, const CyclotomicNumber& y, long n);

}  // namespace skein

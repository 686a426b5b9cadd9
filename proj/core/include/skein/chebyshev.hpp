#pragma once

#include <gmpxx.h>

#include <vector>

#include "skein/matrix.hpp"
#include "skein/root_system.hpp"

namespace skein {

/// Integer coefficients of the normalized Chebyshev polynomial of the first
/// kind, lowest degree first: T_0 = 2, T_1 = x, T_n = x T_{n-1} - T_{n-2}.
struct ChebyshevPoly {
  long n = 0;
  std::vector<mpz_class> coeffs;
};

ChebyshevPoly chebyshev_coeffs(long n);

template <class F>
F chebyshev_eval(const RootSystem<F>& rs, long n, const F& x) {
  if (n < 0) throw SkeinError(ErrorCode::InvalidArgument, "Chebyshev degree must be >= 0");
  F prev = rs.from_int(2);
  if (n == 0) return prev;
  F cur = x;
  for (long k = 2; k <= n; ++k) {
    F next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// The same recurrence on a square matrix: n - 1 matrix products.
template <class F>
Matrix<F> chebyshev_eval(const RootSystem<F>& rs, long n, const Matrix<F>& m) {
  if (n < 0) throw SkeinError(ErrorCode::InvalidArgument, "Chebyshev degree must be >= 0");
  if (!m.is_square()) {
    throw SkeinError(ErrorCode::DimensionMismatch,
                     "Chebyshev evaluation needs a square matrix, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
  }
  Matrix<F> prev = Matrix<F>::scalar(m.rows(), rs.from_int(2), rs.zero());
  if (n == 0) return prev;
  Matrix<F> cur = m;
  for (long k = 2; k <= n; ++k) {
    Matrix<F> next = m * cur;
    next -= prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// All solutions of T_N(x) = t, listed as b A^{2k} + b^{-1} A^{-2k} for
/// k = 1..N, where y is the larger-magnitude root of y^2 - t y + 1 = 0 and
/// b its principal N-th root. Both y roots are kept so callers can report
/// or enumerate the alternative.
struct ChebyshevSolutions {
  std::vector<BigComplex> values;
  BigComplex y_chosen;
  BigComplex y_other;
  BigComplex b;
};

ChebyshevSolutions solve_chebyshev(const NumericRootSystem& rs, const BigComplex& t);

}  // namespace skein

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skein/matrix.hpp"
#include "skein/root_system.hpp"

namespace skein {

template <class F>
struct Nullspace {
  /// Basis vectors of the kernel, each of length cols().
  std::vector<std::vector<F>> basis;
  std::size_t rank = 0;
  /// Approximate backend: |R_kk| of the pivoted QR in decreasing order, and
  /// the cut-off used for the rank decision. Empty / zero when exact.
  std::vector<double> pivot_magnitudes;
  double threshold = 0.0;
};

/// Kernel of `a`. Exact backend: reduced row echelon form over Q(A).
/// Approximate backend: Householder QR with column pivoting; a pivot counts
/// as zero when |R_kk| <= rel_tol * |R_00|.
Nullspace<CyclotomicNumber> nullspace(const Matrix<CyclotomicNumber>& a);
Nullspace<BigComplex> nullspace(const Matrix<BigComplex>& a, double rel_tol);

template <class F>
Nullspace<F> nullspace(const RootSystem<F>& rs, const Matrix<F>& a) {
  if constexpr (is_exact_v<F>) {
    (void)rs;
    return nullspace(a);
  } else {
    return nullspace(a, rs.tolerance().rel_eps);
  }
}

/// Inverse by Gauss-Jordan elimination with partial pivoting; empty when the
/// matrix is (numerically) singular.
template <class F>
std::optional<Matrix<F>> inverse(const RootSystem<F>& rs, const Matrix<F>& m);

/// 1-norm condition number ||M||_1 ||M^-1||_1; infinity when singular.
template <class F>
double condition_estimate(const RootSystem<F>& rs, const Matrix<F>& m);

}  // namespace skein

#pragma once

#include <vector>

#include "skein/matrix.hpp"
#include "skein/representation.hpp"
#include "skein/root_system.hpp"

namespace skein {

/// Eigenline data of rho(X3) together with the up/down operators.
///
/// Everything is stored basis-free: V_k is represented by the spectral
/// projector P_k = prod_{j != k} (rho(X3) - lambda_j) / (lambda_k - lambda_j),
/// so the checks below hold for any conjugate of a constructed representation.
template <class F>
struct LadderSystem {
  int twist = 2;  // lambda_k = x3 A^{twist k} + x3^{-1} A^{-twist k}
  F x3;
  std::vector<F> eigenvalues;          // k = 1..N
  std::vector<Matrix<F>> projectors;   // P_k
  std::vector<Matrix<F>> up;           // U_k
  std::vector<Matrix<F>> down;         // D_k
  /// Scalar by which D_{k+1} U_k acts on V_k.
  std::vector<F> down_up;
  /// Scalar by which U_{k+N-1} ... U_{k+1} U_k acts on V_k, read at k = 1.
  F u;
  /// Scalar by which prod_j D_{k+j} prod_j U_{k+N-j} acts on V_k, at k = 1.
  F cycle_product;

  /// max_k |(rho(X3) - lambda_k) P_k| and |sum_k P_k - Id|.
  double eigen_residual = 0.0;
  /// max_k |(Id - P_{k+1}) U_k P_k| and |(Id - P_{k-1}) D_k P_k|.
  double ladder_residual = 0.0;
  /// max_k |D_{k+1} U_k P_k - down_up_k P_k|, likewise for the cycle products.
  double scalar_residual = 0.0;
};

/// Coefficients of U_k = a rho(X1) + b_k rho(X2) + c_k Id (and D_k likewise),
/// supplied by the surface-specific modules.
template <class F>
struct LadderCoefficients {
  int twist = 2;
  F a;
  std::vector<F> up_x2, up_id;      // index k-1
  std::vector<F> down_x2, down_id;  // index k-1
};

/// Builds the projectors and ladder operators and measures every residual.
/// Throws EigenstructureMismatch if rho(X3) is not annihilated by
/// prod_k (X - lambda_k) within tolerance or the lambda_k are not distinct.
template <class F>
LadderSystem<F> ladder_system(const RootSystem<F>& rs, const Representation<F>& rep, const F& x3,
                              const LadderCoefficients<F>& coeffs);

}  // namespace skein

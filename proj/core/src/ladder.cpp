#include "skein/ladder.hpp"

#include <algorithm>
#include <cmath>

namespace skein {

namespace {

template <class F>
double relative(const Matrix<F>& residual, double scale) {
  return max_abs(residual) / std::max(1.0, scale);
}

}  // namespace

template <class F>
LadderSystem<F> ladder_system(const RootSystem<F>& rs, const Representation<F>& rep, const F& x3,
                              const LadderCoefficients<F>& coeffs) {
  const int N = rs.N();
  const std::size_t n = rep.dim;
  if (n != static_cast<std::size_t>(N)) {
    throw SkeinError(ErrorCode::DimensionMismatch,
                     "ladder analysis expects dimension N = " + std::to_string(N) + ", got " +
                         std::to_string(n));
  }
  const Matrix<F>& x1 = rep.at("X1");
  const Matrix<F>& x2 = rep.at("X2");
  const Matrix<F>& x3m = rep.at("X3");
  const Matrix<F> id = Matrix<F>::identity(n, rs.zero(), rs.one());
  const F x3_inv = rs.inverse(x3);

  LadderSystem<F> out;
  out.twist = coeffs.twist;
  out.x3 = x3;
  for (int k = 1; k <= N; ++k) {
    out.eigenvalues.push_back(x3 * rs.a_pow(coeffs.twist * k) + x3_inv * rs.a_pow(-coeffs.twist * k));
  }
  const double scale = std::max({max_abs(x1), max_abs(x2), max_abs(x3m), 1.0});

  for (int k = 0; k < N; ++k) {
    for (int j = k + 1; j < N; ++j) {
      const F gap = out.eigenvalues[static_cast<std::size_t>(k)] - out.eigenvalues[static_cast<std::size_t>(j)];
      if (rs.is_zero(gap, scale)) {
        throw SkeinError(ErrorCode::EigenstructureMismatch,
                         "eigenvalues lambda_" + std::to_string(k + 1) + " and lambda_" +
                             std::to_string(j + 1) + " coincide");
      }
    }
  }

  // Spectral projectors.
  std::vector<Matrix<F>> shifted;
  for (const F& lambda : out.eigenvalues) shifted.push_back(x3m - Matrix<F>::scalar(n, lambda, rs.zero()));
  Matrix<F> sum(n, n, rs.zero());
  for (int k = 0; k < N; ++k) {
    Matrix<F> p = id;
    for (int j = 0; j < N; ++j) {
      if (j == k) continue;
      p = p * shifted[static_cast<std::size_t>(j)];
      p *= rs.inverse(out.eigenvalues[static_cast<std::size_t>(k)] - out.eigenvalues[static_cast<std::size_t>(j)]);
    }
    out.eigen_residual = std::max(out.eigen_residual, relative(shifted[static_cast<std::size_t>(k)] * p, scale));
    sum += p;
    out.projectors.push_back(std::move(p));
  }
  out.eigen_residual = std::max(out.eigen_residual, relative(sum - id, 1.0));
  if constexpr (is_exact_v<F>) {
    if (out.eigen_residual != 0.0) {
      throw SkeinError(ErrorCode::EigenstructureMismatch, "rho(X3) does not have the expected spectrum");
    }
  } else {
    if (out.eigen_residual > rs.tolerance().rel_eps) {
      throw SkeinError(ErrorCode::EigenstructureMismatch,
                       "rho(X3) does not have the expected spectrum (residual " +
                           format_magnitude(out.eigen_residual) + ")");
    }
  }

  const auto at = [N](const auto& v, int k) -> const auto& {
    return v[static_cast<std::size_t>(((k - 1) % N + N) % N)];
  };
  for (int k = 1; k <= N; ++k) {
    Matrix<F> u = coeffs.a * x1;
    u += at(coeffs.up_x2, k) * x2;
    u += Matrix<F>::scalar(n, at(coeffs.up_id, k), rs.zero());
    Matrix<F> d = coeffs.a * x1;
    d += at(coeffs.down_x2, k) * x2;
    d += Matrix<F>::scalar(n, at(coeffs.down_id, k), rs.zero());
    out.up.push_back(std::move(u));
    out.down.push_back(std::move(d));
  }
  for (int k = 1; k <= N; ++k) {
    const Matrix<F>& pk = at(out.projectors, k);
    const Matrix<F> up_img = at(out.up, k) * pk;
    const Matrix<F> down_img = at(out.down, k) * pk;
    out.ladder_residual = std::max(out.ladder_residual, relative(up_img - at(out.projectors, k + 1) * up_img, scale));
    out.ladder_residual =
        std::max(out.ladder_residual, relative(down_img - at(out.projectors, k - 1) * down_img, scale));

    // Scalar action of D_{k+1} U_k on V_k, read off as a trace against P_k.
    const Matrix<F> du = at(out.down, k + 1) * up_img;
    F tr = rs.zero();
    for (std::size_t i = 0; i < n; ++i) tr += du(i, i);
    out.down_up.push_back(tr);
    out.scalar_residual = std::max(out.scalar_residual, relative(du - tr * pk, scale * scale));
  }

  // Up-cycle and down-up cycle at k = 1.
  const Matrix<F>& p1 = out.projectors.front();
  Matrix<F> cycle = p1;
  for (int j = 0; j < N; ++j) cycle = at(out.up, 1 + j) * cycle;
  out.u = rs.zero();
  for (std::size_t i = 0; i < n; ++i) out.u += cycle(i, i);
  const double cycle_scale = std::pow(scale, N);
  out.scalar_residual = std::max(out.scalar_residual, relative(cycle - out.u * p1, cycle_scale));
  for (int j = N; j >= 1; --j) cycle = at(out.down, 1 + j) * cycle;
  out.cycle_product = rs.zero();
  for (std::size_t i = 0; i < n; ++i) out.cycle_product += cycle(i, i);
  out.scalar_residual =
      std::max(out.scalar_residual, relative(cycle - out.cycle_product * p1, cycle_scale * cycle_scale));
  return out;
}

template LadderSystem<CyclotomicNumber> ladder_system(const ExactRootSystem&, const Representation<CyclotomicNumber>&,
                                                      const CyclotomicNumber&, const LadderCoefficients<CyclotomicNumber>&);
template LadderSystem<BigComplex> ladder_system(const NumericRootSystem&, const Representation<BigComplex>&,
                                                const BigComplex&, const LadderCoefficients<BigComplex>&);

}  // namespace skein

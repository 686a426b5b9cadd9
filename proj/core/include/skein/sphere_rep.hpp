#pragma once

#include <array>
#include <vector>

#include "skein/chebyshev.hpp"
#include "skein/ladder.hpp"
#include "skein/representation.hpp"
#include "skein/root_system.hpp"

namespace skein {

template <class F>
struct SphereAux {
  F q1, q2, q3, delta;
};

/// q1 = p0 p1 + p2 p3, q2 = p0 p2 + p1 p3, q3 = p0 p3 + p1 p2,
/// delta = p0 p1 p2 p3 + p0^2 + p1^2 + p2^2 + p3^2.
template <class F>
SphereAux<F> sphere_aux_invariants(const std::array<F, 4>& p);

/// Data of a four-punctured sphere representation. t1 and t2 are only
/// meaningful once known (targets for solve_u, or read back after a build).
template <class F>
struct SphereParams {
  std::array<F, 4> p;
  F t1, t2, t3;
  F x3;
  SphereAux<F> aux;
};

/// Fills t3 = x3^N + x3^{-N} and the auxiliary invariants.
template <class F>
SphereParams<F> make_sphere_params(const RootSystem<F>& rs, const std::array<F, 4>& p, const F& x3,
                                   const F& t1, const F& t2);

template <class F>
struct LadderScalars {
  std::vector<F> beta_plus;   // k = 1..N, index k-1
  std::vector<F> beta_minus;
  std::vector<F> r;           // R_k, D_{k+1} U_k = R_k on V_k
  F product;                  // prod_k R_k
  F closed_form;              // -prod_i (t3 - T_N(r_i)) / (t3^2 - 4)
};

/// beta_k^+ = (q2 + x3 A^{4k+2} q1) / (x3 A^{4k+2} - x3^{-1} A^{-4k-2})
/// beta_k^- = (-q2 - x3^{-1} A^{-4k+2} q1) / (x3 A^{4k-2} - x3^{-1} A^{-4k+2})
/// R_k = -(delta - 2 + x3^2 A^{8k+4} + x3^{-2} A^{-8k-4}
///         + (x3 A^{4k+2} + x3^{-1} A^{-4k-2}) q3 - beta_{k+1}^- beta_k^+)
/// Throws DegenerateShadow when t3 = +-2.
template <class F>
LadderScalars<F> ladder_scalars_sphere(const RootSystem<F>& rs, const SphereParams<F>& params);

/// (t3 - T_N(r)) (t3 - T_N(r')) for the two roots of r^2 + b r + c, computed
/// as det(t3 - T_N(C)) with C the companion matrix, so no square roots.
template <class F>
F chebyshev_pair_factor(const RootSystem<F>& rs, const F& t3, const F& b, const F& c);

/// Basis action U_k v_k = v_{k+1} (k < N), U_N v_N = u v_1,
/// D_k v_k = R_{k-1} v_{k-1} (k >= 2), D_1 v_1 = (R_N / u) v_N, turned into
/// rho(X1), rho(X2) (three-band plus corners, with a diagonal from the betas)
/// and rho(X3) = diag(x3 A^{4k} + x3^{-1} A^{-4k}).
template <class F>
Representation<F> build_sphere_rep_with_u(const RootSystem<F>& rs, const SphereParams<F>& params, const F& u);

struct SolveUReport {
  BigComplex u;
  BigComplex alpha, beta, f;        // t1(u) = alpha u + beta / u + f
  BigComplex alpha2, beta2, g;      // t2(u) = alpha2 u + beta2 / u + g
  std::array<BigComplex, 2> roots;  // of alpha u^2 + (f - t1) u + beta
  double t2_mismatch = 0.0;         // of the chosen root
  BigComplex trial_u;
};

/// Determines u from (t1, t2) by trial evaluation of T_N(rho(X1)) and
/// T_N(rho(X2)) at u = 1 (u = A as fallback). Errors: NoConsistentRoot,
/// NonScalarChebyshev, VanishingCycle (prod R_k = 0).
SolveUReport solve_u(const NumericRootSystem& rs, const SphereParams<BigComplex>& params);

/// Full pipeline from invariants. t3 fixes x3 via solve_chebyshev.
Representation<BigComplex> build_sphere_rep(const NumericRootSystem& rs, const std::array<BigComplex, 4>& p,
                                            const BigComplex& t1, const BigComplex& t2, const BigComplex& t3);

/// Same pipeline with the gauge x3 given explicitly.
Representation<BigComplex> build_sphere_rep_gauge(const NumericRootSystem& rs,
                                                  const SphereParams<BigComplex>& params);

/// One-dimensional representation P_k -> (p_k) of the sphere with at most
/// three punctures.
template <class F>
Representation<F> small_sphere_rep(const RootSystem<F>& rs, const std::vector<F>& p);

/// U_k = A^2 rho(X1) - x3 A^{4k} rho(X2) + beta_k^+,
/// D_k = A^2 rho(X1) - x3^{-1} A^{-4k} rho(X2) + beta_k^-.
template <class F>
LadderSystem<F> ladder_system_sphere(const RootSystem<F>& rs, const Representation<F>& rep, const F& x3);

}  // namespace skein

#pragma once

#include "skein/chebyshev.hpp"
#include "skein/ladder.hpp"
#include "skein/representation.hpp"
#include "skein/root_system.hpp"

namespace skein {

/// Invariants of a representation of the one-punctured torus algebra, with
/// the convention t_i = -Tr r(X_i), so that T_N(rho(X_i)) = t_i Id, plus the
/// gauge choice x3 (a root of x^N + x^{-N} = t3).
template <class F>
struct TorusParams {
  F t1, t2, t3;
  F x3;
  F p;
};

/// Checks the generic hypotheses and picks the canonical x3.
/// Errors: DegenerateShadow (t3 = +-2), VanishingCycle
/// (t1 t2 t3 + t1^2 + t2^2 = 0), IncompatiblePuncture
/// (T_N(p) != -t1 t2 t3 - t1^2 - t2^2 - t3^2 + 2).
TorusParams<BigComplex> torus_params_from_shadow(const NumericRootSystem& rs, const BigComplex& t1,
                                                 const BigComplex& t2, const BigComplex& t3,
                                                 const BigComplex& p);

/// Parameters determined by (x3, p, u) without root extraction: with
/// d = x3^N - x3^{-N} and K = -(T_N(p) + x3^{2N} + x3^{-2N}),
///   t1 = x3^{-N} u / d - x3^N K / (d u),   t2 = -u / d + K / (d u).
/// These satisfy u = -t1 - x3^N t2 and t1 t2 t3 + t1^2 + t2^2 = K.
template <class F>
TorusParams<F> torus_params_from_family(const RootSystem<F>& rs, const F& x3, const F& p, const F& u);

/// Re-runs the checks of torus_params_from_shadow on given parameters,
/// including x3^N + x3^{-N} = t3.
template <class F>
void check_torus_params(const RootSystem<F>& rs, const TorusParams<F>& params);

/// u = -t1 - x3^N t2.
template <class F>
F torus_u(const RootSystem<F>& rs, const TorusParams<F>& params);

/// The N-dimensional representation in the eigenbasis v_1..v_N of rho(X3):
///   U_k v_k = v_{k+1} (k < N),  U_N v_N = u v_1,
///   D_k v_k = -c_k v_{k-1} (k >= 2),  D_1 v_1 = -(c_1 / u) v_N,
/// with c_k = p + x3^2 A^{4k-2} + x3^{-2} A^{-4k+2}, and rho(X1), rho(X2)
/// recovered from U_k, D_k. The surface is Torus1 unless `closed`, in which
/// case p must be -A^2 - A^{-2} and the result is tagged Torus0.
template <class F>
Representation<F> build_torus_rep(const RootSystem<F>& rs, const TorusParams<F>& params, bool closed = false);

/// The closed-torus specialization p = -A^2 - A^{-2}.
Representation<BigComplex> closed_torus_rep(const NumericRootSystem& rs, const BigComplex& t1,
                                            const BigComplex& t2, const BigComplex& t3);

template <class F>
F closed_torus_puncture(const RootSystem<F>& rs) {
  return -(rs.a_pow(2) + rs.a_pow(-2));
}

/// U_k = A rho(X1) - x3 A^{2k} rho(X2),  D_k = A rho(X1) - x3^{-1} A^{-2k} rho(X2).
template <class F>
LadderSystem<F> ladder_system_torus(const RootSystem<F>& rs, const Representation<F>& rep, const F& x3);

/// The D_{k+1} U_k scalar predicted on V_k: -(p + x3^2 A^{4k+2} + x3^{-2} A^{-4k-2}).
template <class F>
F torus_down_up_scalar(const RootSystem<F>& rs, const F& x3, const F& p, int k);

}  // namespace skein

#include "skein/torus_rep.hpp"

#include <algorithm>

#include "skein/serialization.hpp"

namespace skein {

namespace {

template <class F>
double mag(const F& x) {
  return x.magnitude();
}

template <class F>
Json params_json(const TorusParams<F>& p) {
  return Json{{"t1", scalar_to_json(p.t1)}, {"t2", scalar_to_json(p.t2)}, {"t3", scalar_to_json(p.t3)},
              {"x3", scalar_to_json(p.x3)}, {"p", scalar_to_json(p.p)}};
}

}  // namespace

template <class F>
void check_torus_params(const RootSystem<F>& rs, const TorusParams<F>& params) {
  const F two = rs.from_int(2);
  const double t3m = mag(params.t3);
  if (rs.is_zero(params.t3 - two, t3m) || rs.is_zero(params.t3 + two, t3m)) {
    throw SkeinError(ErrorCode::DegenerateShadow, "t3 = +-2: the eigenvalues of rho(X3) collide");
  }
  const F k = params.t1 * params.t2 * params.t3 + params.t1 * params.t1 + params.t2 * params.t2;
  const double kctx = std::max({mag(params.t1 * params.t2 * params.t3), mag(params.t1 * params.t1),
                                mag(params.t2 * params.t2)});
  if (rs.is_zero(k, kctx)) {
    throw SkeinError(ErrorCode::VanishingCycle, "t1 t2 t3 + t1^2 + t2^2 = 0");
  }
  const F lhs = chebyshev_eval(rs, rs.N(), params.p);
  const F rhs = two - k - params.t3 * params.t3;
  const double ctx = std::max({mag(lhs), kctx, mag(params.t3 * params.t3), 2.0});
  if (!rs.is_zero(lhs - rhs, ctx)) {
    throw SkeinError(ErrorCode::IncompatiblePuncture,
                     "T_N(p) differs from -t1 t2 t3 - t1^2 - t2^2 - t3^2 + 2 by " +
                         format_magnitude(mag(lhs - rhs)));
  }
  const F x3n = rs.pow(params.x3, rs.N());
  const F t3_check = x3n + rs.inverse(x3n);
  if (!rs.is_zero(t3_check - params.t3, std::max(mag(x3n), mag(params.t3)))) {
    throw SkeinError(ErrorCode::InvalidArgument, "x3^N + x3^-N does not equal t3");
  }
}

TorusParams<BigComplex> torus_params_from_shadow(const NumericRootSystem& rs, const BigComplex& t1,
                                                 const BigComplex& t2, const BigComplex& t3,
                                                 const BigComplex& p) {
  const BigComplex two = rs.from_int(2);
  if (rs.is_zero(t3 - two, t3.magnitude()) || rs.is_zero(t3 + two, t3.magnitude())) {
    throw SkeinError(ErrorCode::DegenerateShadow, "t3 = +-2: the eigenvalues of rho(X3) collide");
  }
  TorusParams<BigComplex> params{t1, t2, t3, solve_chebyshev(rs, t3).b, p};
  check_torus_params(rs, params);
  return params;
}

template <class F>
TorusParams<F> torus_params_from_family(const RootSystem<F>& rs, const F& x3, const F& p, const F& u) {
  if (rs.is_zero(u, 0.0)) throw SkeinError(ErrorCode::InvalidArgument, "u must be nonzero");
  const F x3n = rs.pow(x3, rs.N());
  const F x3n_inv = rs.inverse(x3n);
  const F d = x3n - x3n_inv;
  if (rs.is_zero(d, mag(x3n))) {
    throw SkeinError(ErrorCode::DegenerateShadow, "x3^N = +-1: the eigenvalues of rho(X3) collide");
  }
  const F k = -(chebyshev_eval(rs, rs.N(), p) + x3n * x3n + x3n_inv * x3n_inv);
  const F du = d * u;
  TorusParams<F> out{x3n_inv * u / d - x3n * k / du, -u / d + k / du, x3n + x3n_inv, x3, p};
  return out;
}

template <class F>
F torus_u(const RootSystem<F>& rs, const TorusParams<F>& params) {
  return -params.t1 - rs.pow(params.x3, rs.N()) * params.t2;
}

template <class F>
F torus_down_up_scalar(const RootSystem<F>& rs, const F& x3, const F& p, int k) {
  const F x3sq = x3 * x3;
  return -(p + x3sq * rs.a_pow(4L * k + 2) + rs.inverse(x3sq) * rs.a_pow(-4L * k - 2));
}

template <class F>
Representation<F> build_torus_rep(const RootSystem<F>& rs, const TorusParams<F>& params, bool closed) {
  check_torus_params(rs, params);
  if (closed && !rs.approx_eq(params.p, closed_torus_puncture(rs))) {
    throw SkeinError(ErrorCode::IncompatiblePuncture, "the closed torus needs p = -A^2 - A^-2");
  }
  const int N = rs.N();
  const std::size_t n = static_cast<std::size_t>(N);
  const F u = torus_u(rs, params);
  if (rs.is_zero(u, std::max(mag(params.t1), mag(params.t2)))) {
    throw SkeinError(ErrorCode::VanishingCycle, "u = -t1 - x3^N t2 vanishes");
  }
  const F& x3 = params.x3;
  const F x3_inv = rs.inverse(x3);
  const F x3sq = x3 * x3;
  const F x3sq_inv = x3_inv * x3_inv;

  Matrix<F> m1(n, n, rs.zero());
  Matrix<F> m2(n, n, rs.zero());
  Matrix<F> m3(n, n, rs.zero());
  for (int k = 1; k <= N; ++k) {
    const std::size_t col = static_cast<std::size_t>(k - 1);
    const std::size_t above = static_cast<std::size_t>(k % N);           // index of v_{k+1}
    const std::size_t below = static_cast<std::size_t>((k - 2 + N) % N); // index of v_{k-1}
    const F d = x3 * rs.a_pow(2L * k) - x3_inv * rs.a_pow(-2L * k);
    const F c = params.p + x3sq * rs.a_pow(4L * k - 2) + x3sq_inv * rs.a_pow(-4L * k + 2);
    const F up = k < N ? rs.one() : u;
    const F down = k >= 2 ? -c : -(c / u);
    const F d_inv = rs.inverse(d);
    m1(above, col) += -(x3_inv * rs.a_pow(-2L * k - 1) * d_inv) * up;
    m1(below, col) += x3 * rs.a_pow(2L * k - 1) * d_inv * down;
    m2(above, col) += -d_inv * up;
    m2(below, col) += d_inv * down;
    m3(col, col) = x3 * rs.a_pow(2L * k) + x3_inv * rs.a_pow(-2L * k);
  }

  Representation<F> rep;
  rep.surface = closed ? Surface::torus0() : Surface::torus1();
  rep.N = N;
  rep.dim = n;
  rep.generators["X1"] = std::move(m1);
  rep.generators["X2"] = std::move(m2);
  rep.generators["X3"] = std::move(m3);
  if (!closed) rep.generators["P"] = Matrix<F>::scalar(n, params.p, rs.zero());
  rep.punctures["P"] = params.p;
  rep.provenance = Json{{"construction", closed ? "closed_torus" : "torus"},
                        {"params", params_json(params)},
                        {"u", scalar_to_json(u)}};
  return rep;
}

Representation<BigComplex> closed_torus_rep(const NumericRootSystem& rs, const BigComplex& t1,
                                            const BigComplex& t2, const BigComplex& t3) {
  const auto params = torus_params_from_shadow(rs, t1, t2, t3, closed_torus_puncture(rs));
  return build_torus_rep(rs, params, true);
}

template <class F>
LadderSystem<F> ladder_system_torus(const RootSystem<F>& rs, const Representation<F>& rep, const F& x3) {
  if (!rep.surface.is_torus()) {
    throw SkeinError(ErrorCode::SurfaceMismatch, "torus ladder requested for " + to_string(rep.surface));
  }
  LadderCoefficients<F> c;
  c.twist = 2;
  c.a = rs.A();
  const F x3_inv = rs.inverse(x3);
  for (int k = 1; k <= rs.N(); ++k) {
    c.up_x2.push_back(-(x3 * rs.a_pow(2L * k)));
    c.down_x2.push_back(-(x3_inv * rs.a_pow(-2L * k)));
    c.up_id.push_back(rs.zero());
    c.down_id.push_back(rs.zero());
  }
  return ladder_system(rs, rep, x3, c);
}

#define SKEIN_INSTANTIATE_TORUS(F, RS)                                                        \
  template TorusParams<F> torus_params_from_family(const RS&, const F&, const F&, const F&); \
  template void check_torus_params(const RS&, const TorusParams<F>&);                         \
  template F torus_u(const RS&, const TorusParams<F>&);                                       \
  template F torus_down_up_scalar(const RS&, const F&, const F&, int);                        \
  template Representation<F> build_torus_rep(const RS&, const TorusParams<F>&, bool);         \
  template LadderSystem<F> ladder_system_torus(const RS&, const Representation<F>&, const F&);

SKEIN_INSTANTIATE_TORUS(CyclotomicNumber, ExactRootSystem)
SKEIN_INSTANTIATE_TORUS(BigComplex, NumericRootSystem)
#undef SKEIN_INSTANTIATE_TORUS

}  // namespace skein
